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

#include "mdim/graph.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

namespace mdim {

namespace {

void check_order(int n) {
  if (n < 1) {
    throw std::invalid_argument("graph order must be at least 1, got " + std::to_string(n));
  }
  if (n > Graph::kMaxOrder) {
    throw std::invalid_argument("graph order must be at most " +
                                std::to_string(Graph::kMaxOrder) + ", got " + std::to_string(n));
  }
}

void check_vertex(int n, int v, const char* what) {
  if (v < 0 || v >= n) {
    throw std::invalid_argument(std::string(what) + " " + std::to_string(v) +
                                " out of range [0, " + std::to_string(n) + ")");
  }
}

}  // namespace

Graph::Graph(int n) : n_(n), edge_count_(0), rows_(static_cast<std::size_t>(n), 0) {}

void Graph::add_edge(int u, int v) {
  if (!(rows_[u] >> v & 1)) {
    rows_[u] |= std::uint64_t{1} << v;
    rows_[v] |= std::uint64_t{1} << u;
    ++edge_count_;
  }
}

Graph Graph::from_edge_list(int n, std::span<const std::pair<int, int>> edges) {
  check_order(n);
  Graph g(n);
  for (const auto& [u, v] : edges) {
    check_vertex(n, u, "edge endpoint");
    check_vertex(n, v, "edge endpoint");
    if (u == v) {
      throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
    }
    g.add_edge(u, v);
  }
  return g;
}

Graph Graph::from_edge_list(int n, std::initializer_list<std::pair<int, int>> edges) {
  return from_edge_list(n, std::span<const std::pair<int, int>>(edges.begin(), edges.size()));
}

Graph Graph::empty(int n) {
  check_order(n);
  return Graph(n);
}

Graph Graph::path(int n) {
  check_order(n);
  Graph g(n);
  for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

Graph Graph::cycle(int n) {
  if (n < 3) throw std::invalid_argument("a cycle needs at least 3 vertices");
  check_order(n);
  Graph g(n);
  for (int v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
  return g;
}

Graph Graph::complete(int n) {
  check_order(n);
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

Graph Graph::complete_bipartite(int r, int s) {
  if (r < 1 || s < 1) throw std::invalid_argument("complete bipartite parts must be nonempty");
  check_order(r + s);
  Graph g(r + s);
  for (int u = 0; u < r; ++u)
    for (int v = r; v < r + s; ++v) g.add_edge(u, v);
  return g;
}

Graph Graph::disjoint_union(const Graph& a, const Graph& b) {
  check_order(a.order() + b.order());
  Graph g(a.order() + b.order());
  for (int u = 0; u < a.order(); ++u)
    for (int v : a.neighbors(u))
      if (u < v) g.add_edge(u, v);
  for (int u = 0; u < b.order(); ++u)
    for (int v : b.neighbors(u))
      if (u < v) g.add_edge(a.order() + u, a.order() + v);
  return g;
}

Graph Graph::join(const Graph& a, const Graph& b) {
  Graph g = disjoint_union(a, b);
  for (int u = 0; u < a.order(); ++u)
    for (int v = 0; v < b.order(); ++v) g.add_edge(u, a.order() + v);
  return g;
}

bool Graph::adjacent(int u, int v) const {
  check_vertex(n_, u, "vertex");
  check_vertex(n_, v, "vertex");
  return rows_[u] >> v & 1;
}

int Graph::degree(int v) const {
  check_vertex(n_, v, "vertex");
  return std::popcount(rows_[v]);
}

std::uint64_t Graph::row_bits(int v) const {
  check_vertex(n_, v, "vertex");
  return rows_[v];
}

std::vector<int> Graph::neighbors(int v) const {
  std::uint64_t bits = row_bits(v);
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(std::popcount(bits)));
  while (bits) {
    out.push_back(std::countr_zero(bits));
    bits &= bits - 1;
  }
  return out;
}

bool DistanceMatrix::reachable(int u, int v) const {
  check_vertex(n_, u, "vertex");
  check_vertex(n_, v, "vertex");
  return at(u, v) != kUnreachable;
}

int DistanceMatrix::dist(int u, int v) const {
  check_vertex(n_, u, "vertex");
  check_vertex(n_, v, "vertex");
  const int d = at(u, v);
  if (d == kUnreachable) {
    throw std::domain_error("distance requested for unreachable pair (" +
                            std::to_string(u) + ", " + std::to_string(v) + ")");
  }
  return d;
}

DistanceMatrix all_pairs_distances(const Graph& g) {
  const int n = g.order();
  DistanceMatrix dm;
  dm.n_ = n;
  dm.d_.assign(static_cast<std::size_t>(n) * n, DistanceMatrix::kUnreachable);
  int diameter = 0;
  for (int s = 0; s < n; ++s) {
    std::uint64_t seen = std::uint64_t{1} << s;
    std::uint64_t frontier = seen;
    int d = 0;
    while (frontier) {
      std::uint64_t next = 0;
      for (std::uint64_t f = frontier; f; f &= f - 1) {
        const int v = std::countr_zero(f);
        dm.d_[static_cast<std::size_t>(s) * n + v] = d;
        next |= g.row_bits(v);
      }
      frontier = next & ~seen;
      seen |= next;
      diameter = std::max(diameter, d);
      ++d;
    }
  }
  dm.diameter_ = diameter;
  return dm;
}

bool is_connected(const Graph& g) {
  const int n = g.order();
  std::uint64_t seen = 1;
  std::uint64_t frontier = 1;
  while (frontier) {
    std::uint64_t next = 0;
    for (std::uint64_t f = frontier; f; f &= f - 1) next |= g.row_bits(std::countr_zero(f));
    frontier = next & ~seen;
    seen |= next;
  }
  return std::popcount(seen) == n;
}

bool is_complete(const Graph& g) {
  const int n = g.order();
  return g.edge_count() == n * (n - 1) / 2;
}

namespace {

constexpr int kG6Offset = 63;   // printable payload bytes are value + 63
constexpr int kG6MaxOrder = 62; // short form only

}  // namespace

Graph parse_graph6(std::string_view line) {
  constexpr std::string_view kHeader = ">>graph6<<";
  if (line.starts_with(kHeader)) line.remove_prefix(kHeader.size());
  while (!line.empty() && (line.back() == '\n' || line.back() == '\r')) line.remove_suffix(1);
  if (line.empty()) throw parse_error("graph6: empty line");

  const unsigned char first = static_cast<unsigned char>(line[0]);
  if (first == 126) {
    throw parse_error("graph6: long form not supported (order > 62)");
  }
  if (first < kG6Offset || first > 126) {
    throw parse_error("graph6: malformed length byte (value " + std::to_string(first) + ")");
  }
  const int n = first - kG6Offset;
  if (n == 0) throw parse_error("graph6: order 0 not supported");

  const int pair_count = n * (n - 1) / 2;
  const std::size_t payload = (static_cast<std::size_t>(pair_count) + 5) / 6;
  if (line.size() - 1 != payload) {
    throw parse_error("graph6: expected " + std::to_string(payload) + " payload bytes for order " +
                      std::to_string(n) + ", got " + std::to_string(line.size() - 1));
  }

  std::vector<std::pair<int, int>> edges;
  int k = 0;  // pair index in column-major order (0,1),(0,2),(1,2),(0,3),...
  int i = 0, j = 1;
  for (std::size_t b = 1; b < line.size(); ++b) {
    const unsigned char c = static_cast<unsigned char>(line[b]);
    if (c < kG6Offset || c > 126) {
      throw parse_error("graph6: payload byte " + std::to_string(b) + " outside 63..126");
    }
    const int group = c - kG6Offset;
    for (int bit = 5; bit >= 0; --bit, ++k) {
      const bool set = (group >> bit) & 1;
      if (k >= pair_count) {
        if (set) throw parse_error("graph6: trailing padding bits are nonzero");
        continue;
      }
      if (set) edges.emplace_back(i, j);
      if (++i == j) {
        i = 0;
        ++j;
      }
    }
  }
  return Graph::from_edge_list(n, edges);
}

std::string encode_graph6(const Graph& g) {
  const int n = g.order();
  if (n > kG6MaxOrder) {
    throw std::invalid_argument("graph6: order " + std::to_string(n) + " exceeds 62");
  }
  std::string out;
  out.push_back(static_cast<char>(kG6Offset + n));
  int group = 0;
  int bit = 5;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      if (g.adjacent(i, j)) group |= 1 << bit;
      if (--bit < 0) {
        out.push_back(static_cast<char>(kG6Offset + group));
        group = 0;
        bit = 5;
      }
    }
  }
  if (bit != 5) out.push_back(static_cast<char>(kG6Offset + group));
  return out;
}

Graph parse_edge_list_text(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;

  auto next_line = [&]() -> bool {
    while (std::getline(in, line)) {
      ++lineno;
      while (!line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t')) {
        line.pop_back();
      }
      if (!line.empty()) return true;
    }
    return false;
  };
  auto two_ints = [&](int& a, int& b, const char* what) {
    std::istringstream ls(line);
    std::string extra;
    if (!(ls >> a >> b) || (ls >> extra)) {
      throw parse_error("line " + std::to_string(lineno) + ": expected \"" + what + "\"");
    }
  };

  if (!next_line()) throw parse_error("edge list: empty input");
  int n = 0, m = 0;
  two_ints(n, m, "n m");
  if (n < 1) throw parse_error("line 1: order must be at least 1");
  if (m < 0) throw parse_error("line 1: negative edge count");

  std::vector<std::pair<int, int>> edges;
  edges.reserve(static_cast<std::size_t>(m));
  for (int e = 0; e < m; ++e) {
    if (!next_line()) {
      throw parse_error("edge list: expected " + std::to_string(m) + " edges, got " +
                        std::to_string(e));
    }
    int u = 0, v = 0;
    two_ints(u, v, "u v");
    if (u < 0 || u >= n || v < 0 || v >= n) {
      throw parse_error("line " + std::to_string(lineno) + ": endpoint out of range");
    }
    if (u == v) {
      throw parse_error("line " + std::to_string(lineno) + ": self-loop");
    }
    edges.emplace_back(u, v);
  }
  if (next_line()) {
    throw parse_error("line " + std::to_string(lineno) + ": trailing content after edge list");
  }
  return Graph::from_edge_list(n, edges);
}

}  // namespace mdim
