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

#include "mdim/metric.hpp"

#include <algorithm>
#include <numeric>

namespace mdim {

namespace {

void check_landmarks(int n, const LandmarkSet& w) {
  std::uint64_t seen = 0;
  for (int m : w.members) {
    if (m < 0 || m >= n) {
      throw std::invalid_argument("landmark " + std::to_string(m) + " out of range [0, " +
                                  std::to_string(n) + ")");
    }
    if (seen >> m & 1) {
      throw std::invalid_argument("duplicate landmark " + std::to_string(m));
    }
    seen |= std::uint64_t{1} << m;
  }
}

// Core check against a distance matrix, members assumed valid.
bool resolves(const DistanceMatrix& dm, const std::vector<int>& members) {
  const int n = dm.order();
  if (members.empty()) return n == 1;
  std::uint64_t in_w = 0;
  for (int m : members) in_w |= std::uint64_t{1} << m;

  std::vector<Representation> reps;
  reps.reserve(static_cast<std::size_t>(n) - members.size());
  for (int v = 0; v < n; ++v) {
    if (in_w >> v & 1) continue;
    Representation r;
    r.reserve(members.size());
    for (int m : members) r.push_back(dm.dist(v, m));
    reps.push_back(std::move(r));
  }
  std::sort(reps.begin(), reps.end());
  return std::adjacent_find(reps.begin(), reps.end()) == reps.end();
}

std::vector<std::vector<int>> twin_classes_of(const DistanceMatrix& dm) {
  const int n = dm.order();
  auto twins = [&](int u, int v) {
    for (int x = 0; x < n; ++x) {
      if (x == u || x == v) continue;
      if (dm.dist(u, x) != dm.dist(v, x)) return false;
    }
    return true;
  };
  // The twin relation is transitive, so comparing against one representative
  // per class suffices.
  std::vector<std::vector<int>> classes;
  for (int v = 0; v < n; ++v) {
    bool placed = false;
    for (std::vector<int>& c : classes) {
      if (twins(c.front(), v)) {
        c.push_back(v);
        placed = true;
        break;
      }
    }
    if (!placed) classes.push_back({v});
  }
  return classes;
}

}  // namespace

bool LandmarkSet::contains(int v) const {
  return std::find(members.begin(), members.end(), v) != members.end();
}

Representation representation(const DistanceMatrix& dm, int v, const LandmarkSet& w) {
  check_landmarks(dm.order(), w);
  if (v < 0 || v >= dm.order()) {
    throw std::invalid_argument("vertex " + std::to_string(v) + " out of range");
  }
  Representation out;
  out.reserve(w.members.size());
  for (int m : w.members) out.push_back(dm.dist(v, m));
  return out;
}

bool is_resolving(const DistanceMatrix& dm, const LandmarkSet& w) {
  check_landmarks(dm.order(), w);
  if (w.members.empty() && dm.order() > 1) {
    throw std::invalid_argument("is_resolving: empty landmark set on more than one vertex");
  }
  return resolves(dm, w.members);
}

bool is_resolving(const Graph& g, const LandmarkSet& w) {
  if (!is_connected(g)) {
    throw std::invalid_argument("is_resolving: graph must be connected");
  }
  return is_resolving(all_pairs_distances(g), w);
}

MetricDimensionResult metric_dimension(const Graph& g) {
  if (!is_connected(g)) {
    throw std::invalid_argument("metric_dimension: graph must be connected");
  }
  const int n = g.order();
  if (n == 1) return {0, LandmarkSet{}};

  const DistanceMatrix dm = all_pairs_distances(g);
  const std::vector<std::vector<int>> classes = twin_classes_of(dm);
  std::vector<int> class_of(static_cast<std::size_t>(n));
  for (std::size_t c = 0; c < classes.size(); ++c) {
    for (int v : classes[c]) class_of[v] = static_cast<int>(c);
  }
  std::vector<int> picked(classes.size());

  for (int k = 1; k <= n - 1; ++k) {
    std::vector<int> comb(static_cast<std::size_t>(k));
    std::iota(comb.begin(), comb.end(), 0);
    while (true) {
      // Twin rule: a set missing two members of one class cannot resolve.
      std::fill(picked.begin(), picked.end(), 0);
      for (int v : comb) ++picked[class_of[v]];
      bool feasible = true;
      for (std::size_t c = 0; c < classes.size(); ++c) {
        if (static_cast<int>(classes[c].size()) - picked[c] >= 2) {
          feasible = false;
          break;
        }
      }
      if (feasible && resolves(dm, comb)) {
        return {k, LandmarkSet{comb}};
      }
      int i = k - 1;
      while (i >= 0 && comb[i] == n - k + i) --i;
      if (i < 0) break;
      ++comb[i];
      for (int j = i + 1; j < k; ++j) comb[j] = comb[j - 1] + 1;
    }
  }
  throw std::logic_error("metric_dimension: search exhausted without a resolving set");
}

std::vector<std::vector<int>> twin_classes(const Graph& g) {
  if (!is_connected(g)) {
    throw std::invalid_argument("twin_classes: graph must be connected");
  }
  return twin_classes_of(all_pairs_distances(g));
}

LandmarkSet girth_resolving_set(const Graph& g, const CycleInfo& cycle) {
  if (!is_connected(g)) {
    throw std::invalid_argument("girth_resolving_set: graph must be connected");
  }
  const std::optional<CycleInfo> shortest = girth_and_witness(g);
  if (!shortest) {
    throw std::invalid_argument("girth_resolving_set: graph is acyclic");
  }
  if (!is_cycle_of(g, cycle.witness) ||
      static_cast<int>(cycle.witness.size()) != cycle.girth) {
    throw std::invalid_argument("girth_resolving_set: witness is not a cycle of the graph");
  }
  if (cycle.girth != shortest->girth) {
    throw std::invalid_argument("girth_resolving_set: witness is not a shortest cycle");
  }

  // Keep v1 and v2 of the witness, drop v3..vg, keep everything else.
  std::uint64_t dropped = 0;
  for (std::size_t i = 2; i < cycle.witness.size(); ++i) {
    dropped |= std::uint64_t{1} << cycle.witness[i];
  }
  LandmarkSet w;
  for (int v = 0; v < g.order(); ++v) {
    if (!(dropped >> v & 1)) w.members.push_back(v);
  }

  if (!is_resolving(all_pairs_distances(g), w)) {
    throw std::logic_error("girth_resolving_set: constructed set is not resolving");
  }
  return w;
}

UpperBounds upper_bounds(const Graph& g) {
  if (!is_connected(g)) {
    throw std::invalid_argument("upper_bounds: graph must be connected");
  }
  UpperBounds ub;
  ub.diam_bound = g.order() - all_pairs_distances(g).diameter();
  if (std::optional<CycleInfo> c = girth_and_witness(g)) {
    ub.girth_bound = g.order() - c->girth + 2;
  }
  return ub;
}

}  // namespace mdim
