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

#include <string>
#include <vector>

#include "mdim/graph.hpp"
#include "mdim/metric.hpp"

namespace mdim {

enum class Family {
  kCycle,
  kComplete,
  kCompleteBipartite,  // K_{r,s}
  kCompleteSplit,      // K_s joined with an independent set of size t
  kJoinCliqueK1,       // K_s joined with the disjoint union of K_t and a single vertex
};

struct FamilyLabel {
  Family kind;
  int p = 0;  // first parameter, 0 when the family is unparameterized
  int q = 0;  // second parameter

  bool operator==(const FamilyLabel&) const = default;
};

std::string to_string(const FamilyLabel& label);

/// All family tags a graph matches. Tags are not mutually exclusive: the
/// triangle is both a cycle and complete, the 4-cycle is also complete
/// bipartite, and so on.
struct FamilyClassification {
  std::vector<FamilyLabel> labels;

  bool empty() const { return labels.empty(); }
  bool has(Family f) const;
};

/// Number of connected components of G - v met by the landmarks other than
/// v itself. Requires v to be a cut vertex.
int components_hit(const Graph& g, int v, const LandmarkSet& w);

/// Removes cut vertex v from a resolving set that still meets at least two
/// components of G - v. The preconditions are verified and the shrunken set
/// is re-checked to be resolving before it is returned.
LandmarkSet cut_vertex_reduction(const Graph& g, const LandmarkSet& w, int v);

/// Swaps a degree-1 vertex u for its unique neighbor: (W u {u}) \ {v}.
/// Verifies that w resolves g and that the swapped set still does.
LandmarkSet leaf_swap(const Graph& g, const LandmarkSet& w, int u);

/// Families attaining the girth bound: cycles, complete graphs on at least
/// 3 vertices, and complete bipartite graphs with both parts of size >= 2.
FamilyClassification classify_extremal_family(const Graph& g);

/// Families with metric dimension n-2 (order >= 4): complete bipartite
/// K_{s,t} (s,t >= 1), complete split graphs (independent part of size
/// >= 2), and cliques joined with K_t plus one extra vertex. Join structure
/// is detected by peeling the set of dominating vertices.
FamilyClassification classify_n_minus_2_family(const Graph& g);

}  // namespace mdim
