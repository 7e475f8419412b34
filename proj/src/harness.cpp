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

#include "mdim/harness.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <numeric>
#include <sstream>
#include <thread>

#include <json.hpp>

namespace mdim {

namespace {

// Upper-triangle bit masks in graph6 payload order: pair k of the
// column-major sequence (0,1),(0,2),(1,2),(0,3),... sits at bit m-1-k, so
// smaller masks compare exactly like smaller graph6 strings.
struct PairTable {
  int n = 0;
  int m = 0;
  std::array<std::pair<int, int>, 28> pairs{};  // k -> (i, j)
  std::array<std::array<int, 8>, 8> index{};    // (i, j) -> k

  explicit PairTable(int order) : n(order), m(order * (order - 1) / 2) {
    int k = 0;
    for (int j = 1; j < n; ++j) {
      for (int i = 0; i < j; ++i, ++k) {
        pairs[k] = {i, j};
        index[i][j] = k;
        index[j][i] = k;
      }
    }
  }
};

std::uint32_t mask_of(const Graph& g, const PairTable& t) {
  std::uint32_t mask = 0;
  for (int k = 0; k < t.m; ++k) {
    const auto [i, j] = t.pairs[k];
    if (g.adjacent(i, j)) mask |= std::uint32_t{1} << (t.m - 1 - k);
  }
  return mask;
}

std::uint32_t permute_mask(std::uint32_t mask, const int* perm, const PairTable& t) {
  std::uint32_t out = 0;
  while (mask) {
    const int bit = std::countr_zero(mask);
    mask &= mask - 1;
    const auto [i, j] = t.pairs[t.m - 1 - bit];
    const int pi = perm[i], pj = perm[j];
    const int k = t.index[pi][pj];
    out |= std::uint32_t{1} << (t.m - 1 - k);
  }
  return out;
}

std::string g6_of_mask(int n, std::uint32_t mask, const PairTable& t) {
  std::string out;
  out.push_back(static_cast<char>(63 + n));
  int group = 0, bit = 5;
  for (int k = 0; k < t.m; ++k) {
    if (mask >> (t.m - 1 - k) & 1) group |= 1 << bit;
    if (--bit < 0) {
      out.push_back(static_cast<char>(63 + group));
      group = 0;
      bit = 5;
    }
  }
  if (bit != 5) out.push_back(static_cast<char>(63 + group));
  return out;
}

Graph graph_of_mask(int n, std::uint32_t mask, const PairTable& t) {
  std::vector<std::pair<int, int>> edges;
  for (int k = 0; k < t.m; ++k) {
    if (mask >> (t.m - 1 - k) & 1) edges.push_back(t.pairs[k]);
  }
  return Graph::from_edge_list(n, edges);
}

bool mask_connected(int n, std::uint32_t mask, const PairTable& t) {
  std::array<std::uint8_t, 8> rows{};
  for (int k = 0; k < t.m; ++k) {
    if (mask >> (t.m - 1 - k) & 1) {
      const auto [i, j] = t.pairs[k];
      rows[i] |= std::uint8_t(1u << j);
      rows[j] |= std::uint8_t(1u << i);
    }
  }
  std::uint8_t seen = 1, frontier = 1;
  while (frontier) {
    std::uint8_t next = 0;
    for (std::uint8_t f = frontier; f; f &= static_cast<std::uint8_t>(f - 1)) {
      next |= rows[std::countr_zero(static_cast<unsigned>(f))];
    }
    frontier = next & static_cast<std::uint8_t>(~seen);
    seen |= next;
  }
  return std::popcount(static_cast<unsigned>(seen)) == n;
}

}  // namespace

std::string canonical_form(const Graph& g) {
  const int n = g.order();
  if (n > 8) {
    throw std::invalid_argument("canonical_form: order " + std::to_string(n) + " exceeds 8");
  }
  const PairTable t(n);
  const std::uint32_t base = mask_of(g, t);
  std::array<int, 8> perm{};
  std::iota(perm.begin(), perm.begin() + n, 0);
  std::uint32_t best = base;
  do {
    best = std::min(best, permute_mask(base, perm.data(), t));
  } while (std::next_permutation(perm.begin(), perm.begin() + n));
  return g6_of_mask(n, best, t);
}

std::vector<Graph> enumerate_connected_graphs(int n) {
  if (n < 1 || n > 7) {
    throw std::invalid_argument("enumerate_connected_graphs: order must be in 1..7");
  }
  const PairTable t(n);
  std::vector<std::array<int, 7>> perms;
  {
    std::array<int, 7> p{};
    std::iota(p.begin(), p.begin() + n, 0);
    do {
      perms.push_back(p);
    } while (std::next_permutation(p.begin(), p.begin() + n));
  }

  const std::uint32_t total = std::uint32_t{1} << t.m;
  std::vector<bool> visited(total, false);
  std::vector<Graph> out;
  for (std::uint32_t mask = 0; mask < total; ++mask) {
    if (visited[mask]) continue;
    // First unseen mask of its orbit: by ascending order it is the minimal
    // one, i.e. the canonically labeled member of the class.
    for (const auto& p : perms) visited[permute_mask(mask, p.data(), t)] = true;
    if (mask_connected(n, mask, t)) out.push_back(graph_of_mask(n, mask, t));
  }
  return out;
}

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::kPass: return "pass";
    case Verdict::kFail: return "fail";
    case Verdict::kNotApplicable: return "n/a";
  }
  return "?";
}

const std::array<const char*, kNumChecks> kCheckNames = {
    "bound",
    "characterization",
    "two_connected_necessity",
    "diameter_bound",
    "n_minus_1_law",
    "n_minus_2_law",
    "constructive_witness",
    "whitney",
};

bool VerificationReport::any_fail() const {
  return std::any_of(checks.begin(), checks.end(),
                     [](const CheckResult& c) { return c.verdict == Verdict::kFail; });
}

VerificationReport verify_graph(const Graph& g) {
  if (!is_connected(g)) {
    throw std::invalid_argument("verify_graph: graph must be connected");
  }
  VerificationReport r;
  const int n = g.order();
  r.n = n;
  r.edge_count = g.edge_count();
  r.graph_id = n <= 8 ? canonical_form(g) : encode_graph6(g);

  const DistanceMatrix dm = all_pairs_distances(g);
  r.diameter = dm.diameter();
  const MetricDimensionResult md = metric_dimension(g);
  r.beta = md.beta;
  const std::optional<CycleInfo> cyc = girth_and_witness(g);
  if (cyc) r.girth = cyc->girth;
  r.diam_bound = n - dm.diameter();
  if (cyc) r.girth_bound = n - cyc->girth + 2;
  const FamilyClassification fam = classify_extremal_family(g);
  for (const FamilyLabel& label : fam.labels) r.family_labels.push_back(to_string(label));
  r.two_connected = is_two_connected(g);

  auto set = [&](int idx, bool pass, const std::string& detail) {
    r.checks[idx].verdict = pass ? Verdict::kPass : Verdict::kFail;
    if (!pass) r.checks[idx].detail = detail;
  };
  const bool attained = cyc && md.beta == n - cyc->girth + 2;

  if (cyc) {
    const int gb = n - cyc->girth + 2;
    set(0, md.beta <= gb, "beta=" + std::to_string(md.beta) + " exceeds n-g+2=" + std::to_string(gb));
    set(1, attained == !fam.empty(),
        "beta=" + std::to_string(md.beta) + " girth_bound=" + std::to_string(gb) +
            " extremal_families=" + std::to_string(fam.labels.size()));
  }
  if (attained) {
    set(2, r.two_connected, "equality attained but graph has a cut vertex");
  }
  if (n >= 2) {
    set(3, md.beta <= n - dm.diameter(),
        "beta=" + std::to_string(md.beta) + " exceeds n-diam=" + std::to_string(n - dm.diameter()));
  }
  set(4, (md.beta == n - 1) == is_complete(g),
      "beta=" + std::to_string(md.beta) + " n=" + std::to_string(n) +
          " complete=" + (is_complete(g) ? "yes" : "no"));
  if (n >= 4) {
    const bool in_family = !classify_n_minus_2_family(g).empty();
    set(5, (md.beta == n - 2) == in_family,
        "beta=" + std::to_string(md.beta) + " n=" + std::to_string(n) +
            " n_minus_2_family=" + (in_family ? "yes" : "no"));
  }
  if (cyc) {
    try {
      const LandmarkSet w = girth_resolving_set(g, *cyc);
      const bool ok = w.size() == n - cyc->girth + 2 && is_resolving(dm, w);
      set(6, ok, "constructed set of size " + std::to_string(w.size()) + " does not resolve");
    } catch (const std::logic_error& e) {
      set(6, false, e.what());
    }
  }
  {
    std::optional<EarDecomposition> dec;
    if (cyc) dec = try_ear_decomposition(g, cyc->witness);
    const bool valid = dec && validate_ear_decomposition(g, *dec).ok;
    set(7, valid == r.two_connected,
        std::string("two_connected=") + (r.two_connected ? "yes" : "no") +
            " but ear decomposition " + (valid ? "exists" : "does not exist"));
  }
  return r;
}

namespace {

struct IndexedResult {
  std::optional<VerificationReport> report;
  std::string error;
};

}  // namespace

CorpusSummary run_corpus(const std::vector<Graph>& graphs, const CorpusOptions& opt,
                         const ReportSink& sink) {
  const auto start = std::chrono::steady_clock::now();
  CorpusSummary s;
  const int count = static_cast<int>(graphs.size());
  std::vector<IndexedResult> results(static_cast<std::size_t>(count));
  std::atomic<int> next{0};
  std::atomic<int> first_fail{count};

  auto work = [&] {
    while (true) {
      const int i = next.fetch_add(1);
      if (i >= count) break;
      if (opt.fail_fast && i > first_fail.load()) continue;
      try {
        VerificationReport r = verify_graph(graphs[i]);
        if (opt.fail_fast && r.any_fail()) {
          int cur = first_fail.load();
          while (i < cur && !first_fail.compare_exchange_weak(cur, i)) {
          }
        }
        results[i].report = std::move(r);
      } catch (const std::exception& e) {
        results[i].error = "graph " + std::to_string(i + 1) + ": " + e.what();
      }
    }
  };

  const int workers = std::clamp(opt.jobs, 1, std::max(1, count));
  if (workers <= 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (int t = 0; t < workers; ++t) pool.emplace_back(work);
    for (std::thread& t : pool) t.join();
  }

  const int fail_at = first_fail.load();
  const int cutoff = opt.fail_fast && fail_at < count ? fail_at + 1 : count;
  for (int i = 0; i < cutoff; ++i) {
    if (!results[i].error.empty()) {
      ++s.input_errors;
      s.input_error_messages.push_back(results[i].error);
      continue;
    }
    if (!results[i].report) continue;
    const VerificationReport& r = *results[i].report;
    ++s.graphs_checked;
    auto& count_for_n = s.equality_by_n[r.n];
    if (r.girth && r.beta == r.n - *r.girth + 2) ++count_for_n;
    if (r.any_fail()) s.failures.push_back(r);
    if (sink) sink(r);
  }
  s.aborted_early = cutoff < count;
  s.wall_seconds =
      std::chrono::duration_cast<std::chrono::duration<double>>(std::chrono::steady_clock::now() -
                                                                start)
          .count();
  return s;
}

CorpusSummary run_corpus_range(int n_lo, int n_hi, const CorpusOptions& opt,
                               const ReportSink& sink) {
  if (n_lo < 1 || n_hi > 7 || n_lo > n_hi) {
    throw std::invalid_argument("run_corpus_range: range must lie within 1..7");
  }
  std::vector<Graph> graphs;
  for (int n = n_lo; n <= n_hi; ++n) {
    std::vector<Graph> batch = enumerate_connected_graphs(n);
    graphs.insert(graphs.end(), std::make_move_iterator(batch.begin()),
                  std::make_move_iterator(batch.end()));
  }
  return run_corpus(graphs, opt, sink);
}

CorpusSummary run_corpus_graph6_file(const std::string& path, const CorpusOptions& opt,
                                     const ReportSink& sink) {
  std::ifstream in(path);
  if (!in) {
    throw std::runtime_error("cannot open " + path);
  }
  std::vector<Graph> graphs;
  std::vector<std::string> load_errors;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (lineno == 1 && line == ">>graph6<<") continue;
    while (!line.empty() && (line.back() == '\r' || line.back() == '\n')) line.pop_back();
    if (line.empty()) continue;
    try {
      Graph g = parse_graph6(line);
      if (!is_connected(g)) {
        load_errors.push_back("line " + std::to_string(lineno) + ": graph is disconnected");
        continue;
      }
      graphs.push_back(std::move(g));
    } catch (const parse_error& e) {
      load_errors.push_back("line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  CorpusSummary s = run_corpus(graphs, opt, sink);
  s.input_errors += static_cast<std::int64_t>(load_errors.size());
  s.input_error_messages.insert(s.input_error_messages.begin(), load_errors.begin(),
                                load_errors.end());
  return s;
}

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json report_json(const VerificationReport& r) {
  ordered_json j;
  j["graph_id"] = r.graph_id;
  j["n"] = r.n;
  j["edge_count"] = r.edge_count;
  j["beta"] = r.beta;
  j["diameter"] = r.diameter;
  j["girth"] = r.girth ? ordered_json(*r.girth) : ordered_json(nullptr);
  j["diam_bound"] = r.diam_bound;
  j["girth_bound"] = r.girth_bound ? ordered_json(*r.girth_bound) : ordered_json(nullptr);
  j["family_labels"] = r.family_labels;
  j["two_connected"] = r.two_connected;
  ordered_json checks = ordered_json::object();
  for (int i = 0; i < kNumChecks; ++i) checks[kCheckNames[i]] = to_string(r.checks[i].verdict);
  j["checks"] = checks;
  ordered_json detail = ordered_json::object();
  for (int i = 0; i < kNumChecks; ++i) {
    if (r.checks[i].verdict == Verdict::kFail) detail[kCheckNames[i]] = r.checks[i].detail;
  }
  j["fail_detail"] = detail;
  return j;
}

}  // namespace

std::string to_jsonl(const VerificationReport& r) { return report_json(r).dump(); }

std::string to_json(const CorpusSummary& s) {
  ordered_json inner;
  inner["graphs_checked"] = s.graphs_checked;
  inner["predicate_failures"] = static_cast<std::int64_t>(s.failures.size());
  inner["input_errors"] = s.input_errors;
  inner["input_error_messages"] = s.input_error_messages;
  ordered_json eq = ordered_json::object();
  for (const auto& [n, count] : s.equality_by_n) eq[std::to_string(n)] = count;
  inner["equality_by_n"] = eq;
  inner["aborted_early"] = s.aborted_early;
  inner["wall_ms"] = s.wall_seconds * 1000.0;
  ordered_json j;
  j["summary"] = inner;
  return j.dump();
}

std::string csv_header() {
  std::string h = "graph_id,n,edge_count,beta,diameter,girth,diam_bound,girth_bound,"
                  "family_labels,two_connected";
  for (const char* name : kCheckNames) {
    h += ',';
    h += name;
  }
  return h;
}

std::string to_csv_row(const VerificationReport& r) {
  std::ostringstream out;
  out << r.graph_id << ',' << r.n << ',' << r.edge_count << ',' << r.beta << ',' << r.diameter
      << ',';
  if (r.girth) out << *r.girth;
  out << ',' << r.diam_bound << ',';
  if (r.girth_bound) out << *r.girth_bound;
  out << ',';
  for (std::size_t i = 0; i < r.family_labels.size(); ++i) {
    if (i) out << ';';
    out << r.family_labels[i];
  }
  out << ',' << (r.two_connected ? "true" : "false");
  for (const CheckResult& c : r.checks) out << ',' << to_string(c.verdict);
  return out.str();
}

namespace {

std::string family_list(const VerificationReport& r) {
  if (r.family_labels.empty()) return "-";
  std::string out;
  for (std::size_t i = 0; i < r.family_labels.size(); ++i) {
    if (i) out += ';';
    out += r.family_labels[i];
  }
  return out;
}

std::string check_summary(const VerificationReport& r) {
  if (!r.any_fail()) return "pass";
  std::string out = "FAIL(";
  bool first = true;
  for (int i = 0; i < kNumChecks; ++i) {
    if (r.checks[i].verdict == Verdict::kFail) {
      if (!first) out += ',';
      out += kCheckNames[i];
      first = false;
    }
  }
  out += ')';
  return out;
}

}  // namespace

std::string to_text(const VerificationReport& r) {
  std::ostringstream out;
  out << "graph " << r.graph_id << ": n=" << r.n << " edges=" << r.edge_count << " beta=" << r.beta
      << " diameter=" << r.diameter << " girth=";
  if (r.girth) {
    out << *r.girth;
  } else {
    out << "-";
  }
  out << "\n  diam_bound=" << r.diam_bound << " girth_bound=";
  if (r.girth_bound) {
    out << *r.girth_bound;
  } else {
    out << "-";
  }
  out << " families=" << family_list(r) << " two_connected=" << (r.two_connected ? "yes" : "no")
      << "\n";
  for (int i = 0; i < kNumChecks; ++i) {
    out << "  " << kCheckNames[i] << ": " << to_string(r.checks[i].verdict);
    if (r.checks[i].verdict == Verdict::kFail) out << "  [" << r.checks[i].detail << "]";
    out << "\n";
  }
  return out.str();
}

std::string to_text_line(const VerificationReport& r) {
  std::ostringstream out;
  out << r.graph_id << " n=" << r.n << " m=" << r.edge_count << " beta=" << r.beta
      << " diam=" << r.diameter << " girth=";
  if (r.girth) {
    out << *r.girth;
  } else {
    out << "-";
  }
  out << " families=" << family_list(r) << " checks=" << check_summary(r);
  return out.str();
}

std::string to_text(const CorpusSummary& s) {
  std::ostringstream out;
  out << "checked " << s.graphs_checked << " graphs, " << s.failures.size()
      << " predicate failures, " << s.input_errors << " input errors";
  if (s.aborted_early) out << " (aborted early)";
  out << "\n";
  for (const std::string& msg : s.input_error_messages) out << "  input error: " << msg << "\n";
  out << "equality beta = n-g+2 by n:";
  for (const auto& [n, count] : s.equality_by_n) out << " " << n << ":" << count;
  out << "\n";
  char wall[64];
  std::snprintf(wall, sizeof wall, "wall time: %.3f s\n", s.wall_seconds);
  out << wall;
  return out.str();
}

}  // namespace mdim
