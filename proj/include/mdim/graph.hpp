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

#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace mdim {

/// Thrown for malformed textual input (graph6 lines, edge-list files).
class parse_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Immutable simple undirected graph on vertices 0..n-1.
///
/// Adjacency is one 64-bit row per vertex, which caps the order at 64 and
/// makes degree, neighborhood and BFS frontier operations single-word
/// bit manipulation. Values are cheap to copy and safe to share across
/// threads; there is no mutation after construction.
class Graph {
 public:
  static constexpr int kMaxOrder = 64;

  /// Builds a graph from unordered vertex pairs. Duplicate edges collapse
  /// silently; self-loops and out-of-range endpoints are rejected.
  static Graph from_edge_list(int n, std::span<const std::pair<int, int>> edges);
  static Graph from_edge_list(int n, std::initializer_list<std::pair<int, int>> edges);

  // Stock families used throughout the verification code and tests.
  static Graph empty(int n);
  static Graph path(int n);
  static Graph cycle(int n);
  static Graph complete(int n);
  static Graph complete_bipartite(int r, int s);

  /// Disjoint union of a and b, with b's vertices shifted by a.order().
  static Graph disjoint_union(const Graph& a, const Graph& b);
  /// Join: disjoint union plus every edge between the two vertex sets.
  static Graph join(const Graph& a, const Graph& b);

  int order() const { return n_; }
  int edge_count() const { return edge_count_; }
  bool adjacent(int u, int v) const;
  int degree(int v) const;
  /// Neighborhood of v as a bit mask.
  std::uint64_t row_bits(int v) const;
  /// Neighbors of v in ascending order.
  std::vector<int> neighbors(int v) const;

  bool operator==(const Graph&) const = default;

 private:
  explicit Graph(int n);
  void add_edge(int u, int v);

  int n_;
  int edge_count_;
  std::vector<std::uint64_t> rows_;
};

/// All-pairs hop distances plus the diameter (max finite entry).
///
/// Unreachable pairs hold a sentinel that is never handed out: dist() throws
/// instead of returning a value that could silently flow into arithmetic.
/// Use reachable() to probe for disconnected pairs.
class DistanceMatrix {
 public:
  int order() const { return n_; }
  bool reachable(int u, int v) const;
  /// Hop distance; throws std::domain_error for unreachable pairs.
  int dist(int u, int v) const;
  int diameter() const { return diameter_; }

 private:
  friend DistanceMatrix all_pairs_distances(const Graph& g);
  static constexpr int kUnreachable = -1;

  DistanceMatrix() = default;
  int at(int u, int v) const { return d_[static_cast<std::size_t>(u) * n_ + v]; }

  int n_ = 0;
  int diameter_ = 0;
  std::vector<int> d_;
};

/// BFS-exact hop distances from every vertex. Disconnected inputs are fine;
/// unreachable pairs are marked rather than given a fake large distance.
DistanceMatrix all_pairs_distances(const Graph& g);

/// True iff a BFS from vertex 0 reaches every vertex.
bool is_connected(const Graph& g);

/// True iff every pair of vertices is adjacent (K_1 counts).
bool is_complete(const Graph& g);

/// Decodes one short-form graph6 line (order <= 62). A leading
/// ">>graph6<<" header is stripped if present.
Graph parse_graph6(std::string_view line);

/// Short-form graph6 encoding; inverse of parse_graph6 on the same labeling.
std::string encode_graph6(const Graph& g);

/// Parses the plain edge-list format: first line "n m", then m lines "u v"
/// with 0-based endpoints.
Graph parse_edge_list_text(std::string_view text);

}  // namespace mdim
