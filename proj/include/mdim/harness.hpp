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

#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mdim/families.hpp"
#include "mdim/graph.hpp"
#include "mdim/metric.hpp"
#include "mdim/structure.hpp"

namespace mdim {

/// Lexicographically smallest graph6 encoding over all vertex relabelings.
/// Equal strings iff isomorphic. Full n! sweep, capped at order 8.
std::string canonical_form(const Graph& g);

/// Every isomorphism class of connected graphs on n vertices (1 <= n <= 7),
/// each represented by its canonically labeled member, in canonical-string
/// order.
std::vector<Graph> enumerate_connected_graphs(int n);

enum class Verdict { kPass, kFail, kNotApplicable };

const char* to_string(Verdict v);

inline constexpr int kNumChecks = 8;

/// Check names, in report order:
///   bound                    girth exists => beta <= n - g + 2
///   characterization         equality holds iff cycle/complete/complete bipartite
///   two_connected_necessity  equality => 2-connected
///   diameter_bound           n >= 2 => beta <= n - diam
///   n_minus_1_law            beta = n-1 iff complete
///   n_minus_2_law            n >= 4: beta = n-2 iff one of the n-2 families
///   constructive_witness     girth exists => the kept-cycle-endpoints set resolves
///   whitney                  2-connected iff a validated ear decomposition exists
extern const std::array<const char*, kNumChecks> kCheckNames;

struct CheckResult {
  Verdict verdict = Verdict::kNotApplicable;
  std::string detail;  // offending values, set on failure
};

struct VerificationReport {
  std::string graph_id;  // canonical form (order <= 8), else plain graph6
  int n = 0;
  int edge_count = 0;
  int beta = 0;
  int diameter = 0;
  std::optional<int> girth;
  int diam_bound = 0;
  std::optional<int> girth_bound;
  std::vector<std::string> family_labels;
  bool two_connected = false;
  std::array<CheckResult, kNumChecks> checks;

  bool any_fail() const;
};

/// Evaluates every predicate against one connected graph.
VerificationReport verify_graph(const Graph& g);

struct CorpusOptions {
  int jobs = 1;
  bool fail_fast = false;
};

struct CorpusSummary {
  std::int64_t graphs_checked = 0;
  std::int64_t input_errors = 0;
  std::vector<std::string> input_error_messages;
  std::vector<VerificationReport> failures;  // empty iff every predicate passed
  std::map<int, std::int64_t> equality_by_n; // graphs attaining beta = n - g + 2
  double wall_seconds = 0.0;
  bool aborted_early = false;
};

using ReportSink = std::function<void(const VerificationReport&)>;

/// Verifies each graph; reports reach the sink in input order regardless of
/// the worker count, so output is deterministic. Graphs that cannot be
/// verified (disconnected) are counted as input errors.
CorpusSummary run_corpus(const std::vector<Graph>& graphs, const CorpusOptions& opt,
                         const ReportSink& sink = {});

/// Built-in enumeration for each order in [n_lo, n_hi].
CorpusSummary run_corpus_range(int n_lo, int n_hi, const CorpusOptions& opt,
                               const ReportSink& sink = {});

/// One graph6 line per graph; malformed or disconnected lines are recorded
/// with their line number and the run continues.
CorpusSummary run_corpus_graph6_file(const std::string& path, const CorpusOptions& opt,
                                     const ReportSink& sink = {});

// Rendering. Field names and order are stable; see the README schema.
std::string to_jsonl(const VerificationReport& r);
std::string to_json(const CorpusSummary& s);
std::string csv_header();
std::string to_csv_row(const VerificationReport& r);
std::string to_text(const VerificationReport& r);
std::string to_text_line(const VerificationReport& r);
std::string to_text(const CorpusSummary& s);

}  // namespace mdim
