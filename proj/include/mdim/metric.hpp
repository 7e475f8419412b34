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

#include <initializer_list>
#include <optional>
#include <vector>

#include "mdim/graph.hpp"
#include "mdim/structure.hpp"

namespace mdim {

/// Ordered landmark set W = (w1,...,wk). The order fixes the coordinate
/// layout of representation vectors; it does not affect whether W resolves
/// the graph.
struct LandmarkSet {
  std::vector<int> members;

  LandmarkSet() = default;
  LandmarkSet(std::initializer_list<int> m) : members(m) {}
  explicit LandmarkSet(std::vector<int> m) : members(std::move(m)) {}

  int size() const { return static_cast<int>(members.size()); }
  bool contains(int v) const;

  bool operator==(const LandmarkSet&) const = default;
};

/// Vector of hop distances from one vertex to each landmark, in landmark
/// order. Coordinate i is 0 exactly when the vertex is landmark i.
using Representation = std::vector<int>;

/// r(v|W) = (d(v,w1),...,d(v,wk)). Throws if any needed distance is
/// undefined (disconnected probe).
Representation representation(const DistanceMatrix& dm, int v, const LandmarkSet& w);

/// True iff all vertices outside w have pairwise distinct representations
/// (landmarks themselves are always separated by their zero coordinate).
/// Representations are compared as exact integer vectors.
bool is_resolving(const DistanceMatrix& dm, const LandmarkSet& w);
bool is_resolving(const Graph& g, const LandmarkSet& w);

struct MetricDimensionResult {
  int beta = 0;
  LandmarkSet basis;  // first resolving set in cardinality-major, lex-minor order
};

/// Exact metric dimension by sweeping cardinalities k = 1, 2, ... and, within
/// each k, subsets in lexicographic order. Twin-class pruning skips subsets
/// that provably cannot resolve; it never changes the result. A single
/// vertex has dimension 0 with an empty basis. Intended for small orders
/// (roughly n <= 12).
MetricDimensionResult metric_dimension(const Graph& g);

/// Partition of the vertices into twin classes: u and v share a class iff
/// d(u,x) = d(v,x) for every x outside {u,v}. No landmark outside such a
/// pair can tell its members apart, so any resolving set misses at most one
/// vertex per class. Classes are ordered by smallest member.
std::vector<std::vector<int>> twin_classes(const Graph& g);

/// The constructive witness behind the girth bound: every vertex except
/// v3..vg of a shortest cycle (v1,...,vg). The result has exactly
/// n - g + 2 members and is verified to be resolving before it is returned.
LandmarkSet girth_resolving_set(const Graph& g, const CycleInfo& cycle);

struct UpperBounds {
  int diam_bound = 0;              // n - diam(G)
  std::optional<int> girth_bound;  // n - g(G) + 2; absent for forests
};

/// Both upper bounds on the metric dimension in terms of order, diameter
/// and girth.
UpperBounds upper_bounds(const Graph& g);

}  // namespace mdim
