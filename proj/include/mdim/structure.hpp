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

#include <optional>
#include <string>
#include <vector>

#include "mdim/graph.hpp"

namespace mdim {

/// Length of a shortest cycle together with one witness cycle (v1..vg).
struct CycleInfo {
  int girth = 0;
  std::vector<int> witness;

  bool operator==(const CycleInfo&) const = default;
};

/// True iff c lists a cycle of g: at least 3 distinct vertices, consecutive
/// pairs adjacent, closing pair adjacent.
bool is_cycle_of(const Graph& g, const std::vector<int>& c);

/// Exact girth via BFS from every vertex; absent iff g is a forest.
/// The witness is deterministic: among shortest cycles it minimizes the BFS
/// root that detects it, then the canonical (rotated/reflected) sequence.
std::optional<CycleInfo> girth_and_witness(const Graph& g);

/// Vertices whose removal disconnects g, ascending. Requires g connected.
std::vector<int> cut_vertices(const Graph& g);

/// Connected, at least 3 vertices, no cut vertex. Requires g connected.
bool is_two_connected(const Graph& g);

/// Initial cycle plus ordered ears. Each ear is a path whose endpoints lie
/// in the union built so far and whose internal vertices are new at the
/// moment the ear is attached.
struct EarDecomposition {
  std::vector<int> initial_cycle;
  std::vector<std::vector<int>> ears;
};

struct EarValidation {
  bool ok = false;
  std::string reason;  // empty when ok
  explicit operator bool() const { return ok; }
};

/// Greedy ear construction with the given initial cycle. Scans frontier
/// edges by smallest endpoint, then grows each ear by a BFS through new
/// vertices back to the current subgraph. Throws if g is not 2-connected or
/// the witness is not a cycle of g.
EarDecomposition ear_decomposition(const Graph& g, const CycleInfo& initial);

/// Same construction without the 2-connectivity precondition; returns
/// nullopt when the greedy gets stuck (which is exactly the non-2-connected
/// case once the whole corpus is swept).
std::optional<EarDecomposition> try_ear_decomposition(const Graph& g,
                                                      const std::vector<int>& initial_cycle);

/// Checks every ear-decomposition invariant of d against g; on failure the
/// reason names the first violated one.
EarValidation validate_ear_decomposition(const Graph& g, const EarDecomposition& d);

}  // namespace mdim
