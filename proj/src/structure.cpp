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

#include "mdim/structure.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <limits>

namespace mdim {

namespace {

struct BfsTree {
  std::array<int, Graph::kMaxOrder> dist;
  std::array<int, Graph::kMaxOrder> parent;
};

void bfs_tree(const Graph& g, int root, BfsTree& t) {
  const int n = g.order();
  std::fill_n(t.dist.begin(), n, -1);
  std::fill_n(t.parent.begin(), n, -1);
  std::array<int, Graph::kMaxOrder> queue;
  int head = 0, tail = 0;
  t.dist[root] = 0;
  queue[tail++] = root;
  while (head < tail) {
    const int u = queue[head++];
    for (std::uint64_t bits = g.row_bits(u); bits; bits &= bits - 1) {
      const int v = std::countr_zero(bits);
      if (t.dist[v] < 0) {
        t.dist[v] = t.dist[u] + 1;
        t.parent[v] = u;
        queue[tail++] = v;
      }
    }
  }
}

// Rotates/reflects a cycle sequence to start at its smallest vertex and run
// toward the smaller of that vertex's two cycle neighbors.
std::vector<int> canonical_cycle(const std::vector<int>& c) {
  const int len = static_cast<int>(c.size());
  int pos = static_cast<int>(std::min_element(c.begin(), c.end()) - c.begin());
  auto build = [&](int dir) {
    std::vector<int> out(static_cast<std::size_t>(len));
    for (int i = 0; i < len; ++i) out[i] = c[((pos + dir * i) % len + len) % len];
    return out;
  };
  std::vector<int> fwd = build(1);
  std::vector<int> rev = build(-1);
  return fwd < rev ? fwd : rev;
}

// Closed walk root..u -> v..root from one BFS tree; length dist(u)+dist(v)+1.
std::vector<int> walk_through(const BfsTree& t, int root, int u, int v) {
  std::vector<int> seq;
  for (int x = u; x != -1; x = t.parent[x]) seq.push_back(x);
  std::reverse(seq.begin(), seq.end());  // root .. u
  std::vector<int> back;
  for (int x = v; x != root; x = t.parent[x]) back.push_back(x);  // v .. child-of-root
  seq.insert(seq.end(), back.begin(), back.end());
  return seq;
}

bool all_distinct(const std::vector<int>& seq) {
  std::uint64_t seen = 0;
  for (int v : seq) {
    if (seen >> v & 1) return false;
    seen |= std::uint64_t{1} << v;
  }
  return true;
}

}  // namespace

bool is_cycle_of(const Graph& g, const std::vector<int>& c) {
  const int len = static_cast<int>(c.size());
  if (len < 3) return false;
  for (int v : c) {
    if (v < 0 || v >= g.order()) return false;
  }
  if (!all_distinct(c)) return false;
  for (int i = 0; i < len; ++i) {
    if (!g.adjacent(c[i], c[(i + 1) % len])) return false;
  }
  return true;
}

std::optional<CycleInfo> girth_and_witness(const Graph& g) {
  const int n = g.order();
  BfsTree t;
  int best = std::numeric_limits<int>::max();

  // Neighbors of u with index above u; avoids shifting by the word width.
  auto upper_neighbors = [&](int u) {
    const std::uint64_t below = (std::uint64_t{1} << u) - 1;
    return g.row_bits(u) & ~below & ~(std::uint64_t{1} << u);
  };

  // A non-tree edge (u,v) seen from root r closes a walk of length
  // dist(u)+dist(v)+1 through r that contains a cycle no longer than itself,
  // so the minimum over all roots and edges is exactly the girth.
  for (int r = 0; r < n; ++r) {
    bfs_tree(g, r, t);
    for (int u = 0; u < n; ++u) {
      if (t.dist[u] < 0) continue;
      for (std::uint64_t bits = upper_neighbors(u); bits; bits &= bits - 1) {
        const int v = std::countr_zero(bits);
        if (t.dist[v] < 0) continue;
        if (t.parent[u] == v || t.parent[v] == u) continue;
        best = std::min(best, t.dist[u] + t.dist[v] + 1);
      }
    }
  }
  if (best == std::numeric_limits<int>::max()) return std::nullopt;

  // Witness pass: first root attaining the girth, lexicographically smallest
  // canonical sequence among its shortest cycles. Walks of minimum length
  // are always simple.
  for (int r = 0; r < n; ++r) {
    bfs_tree(g, r, t);
    std::optional<std::vector<int>> best_seq;
    for (int u = 0; u < n; ++u) {
      if (t.dist[u] < 0) continue;
      for (std::uint64_t bits = upper_neighbors(u); bits; bits &= bits - 1) {
        const int v = std::countr_zero(bits);
        if (t.dist[v] < 0) continue;
        if (t.parent[u] == v || t.parent[v] == u) continue;
        if (t.dist[u] + t.dist[v] + 1 != best) continue;
        std::vector<int> seq = walk_through(t, r, u, v);
        if (!all_distinct(seq)) {
          throw std::logic_error("girth witness walk is not a simple cycle");
        }
        std::vector<int> canon = canonical_cycle(seq);
        if (!best_seq || canon < *best_seq) best_seq = std::move(canon);
      }
    }
    if (best_seq) return CycleInfo{best, std::move(*best_seq)};
  }
  throw std::logic_error("girth witness reconstruction failed");
}

std::vector<int> cut_vertices(const Graph& g) {
  if (!is_connected(g)) {
    throw std::invalid_argument("cut_vertices: graph must be connected");
  }
  const int n = g.order();
  std::vector<int> disc(static_cast<std::size_t>(n), -1);
  std::vector<int> low(static_cast<std::size_t>(n), 0);
  std::vector<bool> cut(static_cast<std::size_t>(n), false);
  int timer = 0;

  auto dfs = [&](auto&& self, int u, int parent) -> void {
    disc[u] = low[u] = timer++;
    int children = 0;
    for (std::uint64_t bits = g.row_bits(u); bits; bits &= bits - 1) {
      const int v = std::countr_zero(bits);
      if (v == parent) continue;
      if (disc[v] >= 0) {
        low[u] = std::min(low[u], disc[v]);
        continue;
      }
      ++children;
      self(self, v, u);
      low[u] = std::min(low[u], low[v]);
      if (parent >= 0 && low[v] >= disc[u]) cut[u] = true;
    }
    if (parent < 0 && children > 1) cut[u] = true;
  };
  dfs(dfs, 0, -1);

  std::vector<int> out;
  for (int v = 0; v < n; ++v) {
    if (cut[v]) out.push_back(v);
  }
  return out;
}

bool is_two_connected(const Graph& g) {
  if (!is_connected(g)) {
    throw std::invalid_argument("is_two_connected: graph must be connected");
  }
  return g.order() >= 3 && cut_vertices(g).empty();
}

namespace {

// State for the greedy ear construction.
struct EarBuilder {
  const Graph& g;
  std::uint64_t in_sub = 0;                 // vertices of the current union
  std::vector<std::uint64_t> used;          // covered edges, one bit row per vertex
  int used_edges = 0;

  explicit EarBuilder(const Graph& graph)
      : g(graph), used(static_cast<std::size_t>(graph.order()), 0) {}

  bool edge_used(int a, int b) const { return used[a] >> b & 1; }
  void mark_edge(int a, int b) {
    used[a] |= std::uint64_t{1} << b;
    used[b] |= std::uint64_t{1} << a;
    ++used_edges;
  }
  bool in_subgraph(int v) const { return in_sub >> v & 1; }
  void add_vertex(int v) { in_sub |= std::uint64_t{1} << v; }

  // Attempts an ear starting with the frontier edge (u,x), u in the union.
  // Returns the full ear path u,x,...,y (y in the union, y != u) or empty.
  std::vector<int> grow_ear(int u, int x) {
    if (in_subgraph(x)) return {u, x};
    const int n = g.order();
    std::vector<int> parent(static_cast<std::size_t>(n), -2);
    std::array<int, Graph::kMaxOrder> queue;
    int head = 0, tail = 0;
    parent[x] = -1;
    queue[tail++] = x;
    while (head < tail) {
      const int cur = queue[head++];
      for (std::uint64_t bits = g.row_bits(cur); bits; bits &= bits - 1) {
        const int y = std::countr_zero(bits);
        if (in_subgraph(y)) {
          if (y == u) continue;  // returning to u would repeat it in the path
          std::vector<int> chain;
          for (int c = cur; c != -1; c = parent[c]) chain.push_back(c);
          std::vector<int> ear{u};
          ear.insert(ear.end(), chain.rbegin(), chain.rend());
          ear.push_back(y);
          return ear;
        }
        if (parent[y] == -2) {
          parent[y] = cur;
          queue[tail++] = y;
        }
      }
    }
    return {};
  }

  std::vector<int> next_ear() {
    const int n = g.order();
    for (int u = 0; u < n; ++u) {
      if (!in_subgraph(u)) continue;
      for (std::uint64_t bits = g.row_bits(u); bits; bits &= bits - 1) {
        const int x = std::countr_zero(bits);
        if (edge_used(u, x)) continue;
        std::vector<int> ear = grow_ear(u, x);
        if (!ear.empty()) return ear;
      }
    }
    return {};
  }
};

}  // namespace

std::optional<EarDecomposition> try_ear_decomposition(const Graph& g,
                                                      const std::vector<int>& initial_cycle) {
  if (!is_cycle_of(g, initial_cycle)) {
    throw std::invalid_argument("ear decomposition: initial cycle is not a cycle of the graph");
  }
  EarBuilder b(g);
  const int len = static_cast<int>(initial_cycle.size());
  for (int i = 0; i < len; ++i) {
    b.add_vertex(initial_cycle[i]);
    b.mark_edge(initial_cycle[i], initial_cycle[(i + 1) % len]);
  }

  EarDecomposition dec{initial_cycle, {}};
  while (b.used_edges < g.edge_count()) {
    std::vector<int> ear = b.next_ear();
    if (ear.empty()) return std::nullopt;  // stuck: uncovered edges remain
    for (std::size_t i = 0; i + 1 < ear.size(); ++i) b.mark_edge(ear[i], ear[i + 1]);
    for (std::size_t i = 1; i + 1 < ear.size(); ++i) b.add_vertex(ear[i]);
    dec.ears.push_back(std::move(ear));
  }
  return dec;
}

EarDecomposition ear_decomposition(const Graph& g, const CycleInfo& initial) {
  if (!is_two_connected(g)) {
    throw std::invalid_argument("ear_decomposition: graph is not 2-connected");
  }
  if (!is_cycle_of(g, initial.witness) ||
      static_cast<int>(initial.witness.size()) != initial.girth) {
    throw std::invalid_argument("ear_decomposition: witness is not a cycle of the graph");
  }
  std::optional<EarDecomposition> dec = try_ear_decomposition(g, initial.witness);
  if (!dec) {
    throw std::logic_error("ear_decomposition: construction stuck on a 2-connected graph");
  }
  if (EarValidation v = validate_ear_decomposition(g, *dec); !v) {
    throw std::logic_error("ear_decomposition: invalid result: " + v.reason);
  }
  return std::move(*dec);
}

EarValidation validate_ear_decomposition(const Graph& g, const EarDecomposition& d) {
  auto fail = [](std::string reason) { return EarValidation{false, std::move(reason)}; };
  const int n = g.order();

  if (!is_cycle_of(g, d.initial_cycle)) return fail("initial cycle is not a cycle of the graph");

  std::uint64_t in_sub = 0;
  std::vector<std::uint64_t> used(static_cast<std::size_t>(n), 0);
  int used_edges = 0;
  auto mark = [&](int a, int b) -> bool {
    if (used[a] >> b & 1) return false;
    used[a] |= std::uint64_t{1} << b;
    used[b] |= std::uint64_t{1} << a;
    ++used_edges;
    return true;
  };

  const int len = static_cast<int>(d.initial_cycle.size());
  for (int i = 0; i < len; ++i) {
    in_sub |= std::uint64_t{1} << d.initial_cycle[i];
    mark(d.initial_cycle[i], d.initial_cycle[(i + 1) % len]);
  }

  for (std::size_t e = 0; e < d.ears.size(); ++e) {
    const std::vector<int>& ear = d.ears[e];
    const std::string tag = "ear " + std::to_string(e + 1);
    if (ear.size() < 2) return fail(tag + ": fewer than two vertices");
    for (int v : ear) {
      if (v < 0 || v >= n) return fail(tag + ": vertex out of range");
    }
    if (!all_distinct(ear)) return fail(tag + ": repeated vertex (not a path)");
    if (!(in_sub >> ear.front() & 1) || !(in_sub >> ear.back() & 1)) {
      return fail(tag + ": endpoint not in the subgraph built so far");
    }
    for (std::size_t i = 1; i + 1 < ear.size(); ++i) {
      if (in_sub >> ear[i] & 1) return fail(tag + ": internal vertex already in the subgraph");
    }
    for (std::size_t i = 0; i + 1 < ear.size(); ++i) {
      if (!g.adjacent(ear[i], ear[i + 1])) return fail(tag + ": consecutive vertices not adjacent");
      if (!mark(ear[i], ear[i + 1])) return fail(tag + ": edge already covered");
    }
    for (std::size_t i = 1; i + 1 < ear.size(); ++i) {
      in_sub |= std::uint64_t{1} << ear[i];
      if (std::popcount(used[ear[i]]) != 2) {
        return fail(tag + ": internal vertex degree is not 2 at the moment of addition");
      }
    }
  }

  if (std::popcount(in_sub) != n) return fail("union does not cover every vertex");
  if (used_edges != g.edge_count()) return fail("union does not cover every edge");
  return EarValidation{true, ""};
}

}  // namespace mdim
