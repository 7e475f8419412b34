// Copyright 2026 The mdim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cctype>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "mdim/harness.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitPredicateFailure = 1;
constexpr int kExitInputError = 2;

struct GraphInput {
  std::string g6;
  std::string path;
  std::string format = "auto";  // auto, g6, edgelist

  void add_options(CLI::App* cmd) {
    cmd->add_option("--g6", g6, "literal graph6 string");
    cmd->add_option("--input,-i", path, "input file (\"-\" for stdin)");
    cmd->add_option("--input-format", format, "input format: auto, g6, edgelist")
        ->check(CLI::IsMember({"auto", "g6", "edgelist"}));
  }
};

std::string read_all(const std::string& path) {
  if (path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

bool looks_like_edge_list(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (line == ">>graph6<<") return false;
    bool blank = true;
    for (char c : line) {
      if (!std::isspace(static_cast<unsigned char>(c))) blank = false;
    }
    if (blank) continue;
    // graph6 bytes are all >= 63, so a line of digits and spaces is an
    // unambiguous edge-list header.
    for (char c : line) {
      if (!std::isdigit(static_cast<unsigned char>(c)) && c != ' ' && c != '\t') return false;
    }
    return true;
  }
  return false;
}

mdim::Graph first_graph6_line(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (lineno == 1 && line == ">>graph6<<") continue;
    while (!line.empty() && (line.back() == '\r' || line.back() == '\n')) line.pop_back();
    if (!line.empty()) return mdim::parse_graph6(line);
  }
  throw mdim::parse_error("no graph6 line found");
}

mdim::Graph load_graph(const GraphInput& spec) {
  if (!spec.g6.empty() && !spec.path.empty()) {
    throw std::runtime_error("give either --g6 or --input, not both");
  }
  if (!spec.g6.empty()) return mdim::parse_graph6(spec.g6);
  if (spec.path.empty()) throw std::runtime_error("no input graph: use --g6 or --input");

  const std::string text = read_all(spec.path);
  if (spec.format == "edgelist" || (spec.format == "auto" && looks_like_edge_list(text))) {
    return mdim::parse_edge_list_text(text);
  }
  return first_graph6_line(text);
}

void print_basis(std::ostream& out, const mdim::LandmarkSet& basis) {
  for (std::size_t i = 0; i < basis.members.size(); ++i) {
    if (i) out << ' ';
    out << basis.members[i];
  }
}

int cmd_analyze(const GraphInput& input, const std::string& format) {
  const mdim::Graph g = load_graph(input);
  if (!mdim::is_connected(g)) {
    std::cerr << "analyze: graph is disconnected\n";
    return kExitInputError;
  }
  const mdim::VerificationReport r = mdim::verify_graph(g);
  if (format == "json") {
    std::cout << mdim::to_jsonl(r) << "\n";
  } else if (format == "csv") {
    std::cout << mdim::csv_header() << "\n" << mdim::to_csv_row(r) << "\n";
  } else {
    std::cout << mdim::to_text(r);
  }
  return r.any_fail() ? kExitPredicateFailure : kExitOk;
}

int cmd_solve(const GraphInput& input, const std::string& format) {
  const mdim::Graph g = load_graph(input);
  if (!mdim::is_connected(g)) {
    std::cerr << "solve: graph is disconnected\n";
    return kExitInputError;
  }
  const mdim::MetricDimensionResult res = mdim::metric_dimension(g);
  if (format == "json") {
    std::cout << "{\"beta\":" << res.beta << ",\"basis\":[";
    for (std::size_t i = 0; i < res.basis.members.size(); ++i) {
      if (i) std::cout << ',';
      std::cout << res.basis.members[i];
    }
    std::cout << "]}\n";
  } else if (format == "csv") {
    std::cout << "beta,basis\n" << res.beta << ",";
    for (std::size_t i = 0; i < res.basis.members.size(); ++i) {
      if (i) std::cout << ';';
      std::cout << res.basis.members[i];
    }
    std::cout << "\n";
  } else {
    std::cout << "beta " << res.beta << "\nbasis ";
    print_basis(std::cout, res.basis);
    std::cout << "\n";
  }
  return kExitOk;
}

int cmd_decompose(const GraphInput& input, const std::string& format) {
  const mdim::Graph g = load_graph(input);
  if (!mdim::is_connected(g)) {
    std::cerr << "decompose: graph is disconnected\n";
    return kExitInputError;
  }
  if (!mdim::is_two_connected(g)) {
    std::cerr << "decompose: graph is not 2-connected\n";
    return kExitInputError;
  }
  const auto cycle = mdim::girth_and_witness(g);
  const mdim::EarDecomposition dec = mdim::ear_decomposition(g, *cycle);
  if (format == "json") {
    std::ostringstream out;
    auto seq = [&](const std::vector<int>& s) {
      out << '[';
      for (std::size_t i = 0; i < s.size(); ++i) {
        if (i) out << ',';
        out << s[i];
      }
      out << ']';
    };
    out << "{\"initial_cycle\":";
    seq(dec.initial_cycle);
    out << ",\"ears\":[";
    for (std::size_t i = 0; i < dec.ears.size(); ++i) {
      if (i) out << ',';
      seq(dec.ears[i]);
    }
    out << "]}";
    std::cout << out.str() << "\n";
  } else if (format == "csv") {
    std::cout << "part,vertices\ninitial_cycle,";
    for (std::size_t i = 0; i < dec.initial_cycle.size(); ++i) {
      if (i) std::cout << ';';
      std::cout << dec.initial_cycle[i];
    }
    std::cout << "\n";
    for (std::size_t e = 0; e < dec.ears.size(); ++e) {
      std::cout << "ear" << (e + 1) << ",";
      for (std::size_t i = 0; i < dec.ears[e].size(); ++i) {
        if (i) std::cout << ';';
        std::cout << dec.ears[e][i];
      }
      std::cout << "\n";
    }
  } else {
    std::cout << "initial_cycle:";
    for (int v : dec.initial_cycle) std::cout << ' ' << v;
    std::cout << "\n";
    for (std::size_t e = 0; e < dec.ears.size(); ++e) {
      std::cout << "ear " << (e + 1) << ":";
      for (int v : dec.ears[e]) std::cout << ' ' << v;
      std::cout << "\n";
    }
  }
  return kExitOk;
}

int cmd_enumerate(int n) {
  for (const mdim::Graph& g : mdim::enumerate_connected_graphs(n)) {
    std::cout << mdim::encode_graph6(g) << "\n";
  }
  return kExitOk;
}

bool parse_range(const std::string& text, int& lo, int& hi) {
  const std::size_t dots = text.find("..");
  try {
    if (dots == std::string::npos) {
      lo = hi = std::stoi(text);
    } else {
      lo = std::stoi(text.substr(0, dots));
      hi = std::stoi(text.substr(dots + 2));
    }
  } catch (const std::exception&) {
    return false;
  }
  return lo >= 1 && lo <= hi;
}

int cmd_verify(const std::string& range, const GraphInput& input, const std::string& format,
               int jobs, bool fail_fast) {
  mdim::CorpusOptions opt;
  opt.jobs = jobs;
  opt.fail_fast = fail_fast;

  mdim::ReportSink sink;
  if (format == "json") {
    sink = [](const mdim::VerificationReport& r) { std::cout << mdim::to_jsonl(r) << "\n"; };
  } else if (format == "csv") {
    std::cout << mdim::csv_header() << "\n";
    sink = [](const mdim::VerificationReport& r) { std::cout << mdim::to_csv_row(r) << "\n"; };
  } else {
    sink = [](const mdim::VerificationReport& r) { std::cout << mdim::to_text_line(r) << "\n"; };
  }

  mdim::CorpusSummary summary;
  if (!range.empty()) {
    int lo = 0, hi = 0;
    if (!parse_range(range, lo, hi) || hi > 7) {
      std::cerr << "verify: --n expects a range within 1..7, e.g. 5 or 3..7\n";
      return kExitInputError;
    }
    summary = mdim::run_corpus_range(lo, hi, opt, sink);
  } else if (!input.path.empty()) {
    if (input.format == "edgelist" ||
        (input.format == "auto" && looks_like_edge_list(read_all(input.path)))) {
      summary = mdim::run_corpus({mdim::parse_edge_list_text(read_all(input.path))}, opt, sink);
    } else {
      summary = mdim::run_corpus_graph6_file(input.path, opt, sink);
    }
  } else {
    std::cerr << "verify: give --n RANGE or --input FILE\n";
    return kExitInputError;
  }

  if (format == "json") {
    std::cout << mdim::to_json(summary) << "\n";
  } else if (format == "csv") {
    std::cerr << mdim::to_text(summary);
  } else {
    std::cout << mdim::to_text(summary);
  }

  if (!summary.failures.empty()) return kExitPredicateFailure;
  if (summary.graphs_checked == 0 && summary.input_errors > 0) return kExitInputError;
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"metric dimension, girth and resolving-set toolkit for small graphs"};
  app.require_subcommand(1);
  app.fallthrough();  // allow --format after the subcommand name

  std::string format = "text";
  app.add_option("--format", format, "output format")
      ->check(CLI::IsMember({"text", "json", "csv"}));

  GraphInput analyze_in, solve_in, decompose_in, verify_in;

  CLI::App* analyze = app.add_subcommand("analyze", "full structural report for one graph");
  analyze_in.add_options(analyze);

  CLI::App* solve = app.add_subcommand("solve", "metric dimension and one metric basis");
  solve_in.add_options(solve);

  CLI::App* verify = app.add_subcommand("verify", "run every predicate over a corpus");
  std::string range;
  int jobs = 1;
  bool fail_fast = false;
  verify->add_option("--n", range, "built-in corpus range, e.g. 5 or 3..7");
  verify_in.add_options(verify);
  verify->add_option("--jobs,-j", jobs, "worker threads")->check(CLI::PositiveNumber);
  verify->add_flag("--fail-fast", fail_fast, "stop after the first predicate failure");

  CLI::App* enumerate = app.add_subcommand("enumerate", "emit connected graphs of order n, one graph6 line per isomorphism class");
  int enum_n = 0;
  enumerate->add_option("--n", enum_n, "order (1..7)")->required()->check(CLI::Range(1, 7));

  CLI::App* decompose = app.add_subcommand("decompose", "ear decomposition starting from a shortest cycle");
  decompose_in.add_options(decompose);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInputError;
  }

  try {
    if (analyze->parsed()) return cmd_analyze(analyze_in, format);
    if (solve->parsed()) return cmd_solve(solve_in, format);
    if (verify->parsed()) return cmd_verify(range, verify_in, format, jobs, fail_fast);
    if (enumerate->parsed()) return cmd_enumerate(enum_n);
    if (decompose->parsed()) return cmd_decompose(decompose_in, format);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitOk;
}
