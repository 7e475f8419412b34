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

#include "mdim/families.hpp"

#include <algorithm>
#include <bit>
#include <optional>

namespace mdim {

namespace {

// Component ids of G - skip; returns the number of components. The removed
// vertex gets id -1.
int components_excluding(const Graph& g, int skip, std::vector<int>& comp) {
  const int n = g.order();
  comp.assign(static_cast<std::size_t>(n), -1);
  int count = 0;
  for (int s = 0; s < n; ++s) {
    if (s == skip || comp[s] >= 0) continue;
    std::uint64_t seen = std::uint64_t{1} << s;
    std::uint64_t frontier = seen;
    const std::uint64_t block = std::uint64_t{1} << skip;
    while (frontier) {
      std::uint64_t next = 0;
      for (std::uint64_t f = frontier; f; f &= f - 1) next |= g.row_bits(std::countr_zero(f));
      next &= ~block;
      frontier = next & ~seen;
      seen |= next;
    }
    for (std::uint64_t f = seen; f; f &= f - 1) comp[std::countr_zero(f)] = count;
    ++count;
  }
  return count;
}

// Part sizes (small, large) when g is complete bipartite, nullopt otherwise.
// Assumes g connected, so the bipartition is unique.
std::optional<std::pair<int, int>> complete_bipartite_parts(const Graph& g) {
  const int n = g.order();
  if (n < 2) return std::nullopt;
  std::vector<int> color(static_cast<std::size_t>(n), -1);
  color[0] = 0;
  std::vector<int> queue{0};
  for (std::size_t h = 0; h < queue.size(); ++h) {
    const int u = queue[h];
    for (int v : g.neighbors(u)) {
      if (color[v] < 0) {
        color[v] = 1 - color[u];
        queue.push_back(v);
      } else if (color[v] == color[u]) {
        return std::nullopt;  // odd cycle
      }
    }
  }
  const int a = static_cast<int>(std::count(color.begin(), color.end(), 0));
  const int b = n - a;
  if (a < 1 || b < 1) return std::nullopt;
  if (g.edge_count() != a * b) return std::nullopt;  // cross edges missing
  return std::make_pair(std::min(a, b), std::max(a, b));
}

}  // namespace

std::string to_string(const FamilyLabel& label) {
  auto params = [&] {
    return "(" + std::to_string(label.p) + "," + std::to_string(label.q) + ")";
  };
  switch (label.kind) {
    case Family::kCycle: return "Cycle";
    case Family::kComplete: return "Complete";
    case Family::kCompleteBipartite: return "CompleteBipartite" + params();
    case Family::kCompleteSplit: return "CompleteSplit" + params();
    case Family::kJoinCliqueK1: return "JoinKK1" + params();
  }
  return "?";
}

bool FamilyClassification::has(Family f) const {
  return std::any_of(labels.begin(), labels.end(),
                     [f](const FamilyLabel& l) { return l.kind == f; });
}

int components_hit(const Graph& g, int v, const LandmarkSet& w) {
  if (!is_connected(g)) {
    throw std::invalid_argument("components_hit: graph must be connected");
  }
  if (v < 0 || v >= g.order()) {
    throw std::invalid_argument("components_hit: vertex out of range");
  }
  std::vector<int> comp;
  const int count = components_excluding(g, v, comp);
  if (count < 2) {
    throw std::invalid_argument("components_hit: vertex " + std::to_string(v) +
                                " is not a cut vertex");
  }
  std::vector<char> hit(static_cast<std::size_t>(count), 0);
  for (int m : w.members) {
    if (m != v) hit[comp[m]] = 1;
  }
  return static_cast<int>(std::count(hit.begin(), hit.end(), 1));
}

LandmarkSet cut_vertex_reduction(const Graph& g, const LandmarkSet& w, int v) {
  if (!is_resolving(g, w)) {
    throw std::invalid_argument("cut_vertex_reduction: landmark set is not resolving");
  }
  if (!w.contains(v)) {
    throw std::invalid_argument("cut_vertex_reduction: vertex is not a landmark");
  }
  if (components_hit(g, v, w) < 2) {
    throw std::invalid_argument(
        "cut_vertex_reduction: landmarks meet fewer than two components of G - v");
  }
  LandmarkSet out;
  out.members.reserve(w.members.size() - 1);
  for (int m : w.members) {
    if (m != v) out.members.push_back(m);
  }
  if (!is_resolving(g, out)) {
    throw std::logic_error("cut_vertex_reduction: reduced set is not resolving");
  }
  return out;
}

LandmarkSet leaf_swap(const Graph& g, const LandmarkSet& w, int u) {
  if (!is_resolving(g, w)) {
    throw std::invalid_argument("leaf_swap: landmark set is not resolving");
  }
  if (u < 0 || u >= g.order() || g.degree(u) != 1) {
    throw std::invalid_argument("leaf_swap: vertex must have degree 1");
  }
  const int v = g.neighbors(u).front();
  LandmarkSet out;
  for (int m : w.members) {
    if (m != v) out.members.push_back(m);
  }
  if (!out.contains(u)) out.members.push_back(u);
  if (!is_resolving(g, out)) {
    throw std::logic_error("leaf_swap: swapped set is not resolving");
  }
  return out;
}

FamilyClassification classify_extremal_family(const Graph& g) {
  if (!is_connected(g)) {
    throw std::invalid_argument("classify_extremal_family: graph must be connected");
  }
  const int n = g.order();
  FamilyClassification out;

  bool two_regular = n >= 3;
  for (int v = 0; v < n && two_regular; ++v) two_regular = g.degree(v) == 2;
  if (two_regular) out.labels.push_back({Family::kCycle, 0, 0});

  if (n >= 3 && is_complete(g)) out.labels.push_back({Family::kComplete, 0, 0});

  if (auto parts = complete_bipartite_parts(g); parts && parts->first >= 2) {
    out.labels.push_back({Family::kCompleteBipartite, parts->first, parts->second});
  }
  return out;
}

FamilyClassification classify_n_minus_2_family(const Graph& g) {
  if (!is_connected(g)) {
    throw std::invalid_argument("classify_n_minus_2_family: graph must be connected");
  }
  const int n = g.order();
  if (n < 4) {
    throw std::invalid_argument("classify_n_minus_2_family: order must be at least 4");
  }
  FamilyClassification out;

  if (auto parts = complete_bipartite_parts(g)) {
    out.labels.push_back({Family::kCompleteBipartite, parts->first, parts->second});
  }

  // Dominating vertices (adjacent to all others) are automatically a clique;
  // the join families are exactly "that clique joined with what remains".
  std::vector<int> rest;
  int s = 0;
  for (int v = 0; v < n; ++v) {
    if (g.degree(v) == n - 1) {
      ++s;
    } else {
      rest.push_back(v);
    }
  }
  if (s >= 1 && !rest.empty()) {
    const int t = static_cast<int>(rest.size());
    bool independent = true;
    for (std::size_t i = 0; i < rest.size() && independent; ++i) {
      for (std::size_t j = i + 1; j < rest.size() && independent; ++j) {
        if (g.adjacent(rest[i], rest[j])) independent = false;
      }
    }
    if (independent && t >= 2) {
      out.labels.push_back({Family::kCompleteSplit, s, t});
    }

    // Remainder shaped K_t plus one isolated vertex: exactly two components,
    // both cliques, at least one a single vertex.
    std::uint64_t rest_bits = 0;
    for (int v : rest) rest_bits |= std::uint64_t{1} << v;
    std::vector<std::vector<int>> comps;
    std::uint64_t unseen = rest_bits;
    while (unseen) {
      const int start = std::countr_zero(unseen);
      std::uint64_t seen = std::uint64_t{1} << start;
      std::uint64_t frontier = seen;
      while (frontier) {
        std::uint64_t next = 0;
        for (std::uint64_t f = frontier; f; f &= f - 1) next |= g.row_bits(std::countr_zero(f));
        next &= rest_bits;
        frontier = next & ~seen;
        seen |= next;
      }
      std::vector<int> comp;
      for (std::uint64_t f = seen; f; f &= f - 1) comp.push_back(std::countr_zero(f));
      comps.push_back(std::move(comp));
      unseen &= ~seen;
    }
    if (comps.size() == 2) {
      auto is_clique = [&](const std::vector<int>& c) {
        for (std::size_t i = 0; i < c.size(); ++i)
          for (std::size_t j = i + 1; j < c.size(); ++j)
            if (!g.adjacent(c[i], c[j])) return false;
        return true;
      };
      const int small = static_cast<int>(std::min(comps[0].size(), comps[1].size()));
      const int large = static_cast<int>(std::max(comps[0].size(), comps[1].size()));
      if (small == 1 && is_clique(comps[0]) && is_clique(comps[1])) {
        out.labels.push_back({Family::kJoinCliqueK1, s, large});
      }
    }
  }
  return out;
}

}  // namespace mdim
