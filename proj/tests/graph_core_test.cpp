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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "mdim/graph.hpp"
#include "test_util.hpp"

using mdim::Graph;

TEST_CASE("from_edge_list builds the path and the cycle") {
  const Graph p3 = Graph::from_edge_list(3, {{0, 1}, {1, 2}});
  CHECK(p3.order() == 3);
  CHECK(p3.edge_count() == 2);
  CHECK(p3.adjacent(0, 1));
  CHECK(p3.adjacent(1, 2));
  CHECK_FALSE(p3.adjacent(0, 2));
  CHECK(p3 == Graph::path(3));

  const Graph c4 = Graph::from_edge_list(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
  CHECK(c4 == Graph::cycle(4));
  for (int v = 0; v < 4; ++v) CHECK(c4.degree(v) == 2);
}

TEST_CASE("from_edge_list rejects bad input") {
  CHECK_THROWS_AS(Graph::from_edge_list(3, {{0, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph::from_edge_list(0, {}), std::invalid_argument);
  CHECK_THROWS_AS(Graph::from_edge_list(3, {{0, 3}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph::from_edge_list(3, {{-1, 1}}), std::invalid_argument);
}

TEST_CASE("duplicate edges collapse silently") {
  const Graph g = Graph::from_edge_list(3, {{0, 1}, {1, 0}, {0, 1}, {1, 2}});
  CHECK(g.edge_count() == 2);
  CHECK(g == Graph::path(3));
}

TEST_CASE("graph6 known vectors") {
  CHECK(mdim::parse_graph6("A_") == Graph::complete(2));
  CHECK(mdim::parse_graph6("A?") == Graph::empty(2));
  CHECK(mdim::encode_graph6(Graph::complete(2)) == "A_");
  CHECK(mdim::encode_graph6(Graph::empty(2)) == "A?");

  // C5 with labels in cycle order 0,1,2,3,4.
  const Graph c5 = mdim::parse_graph6("Dhc");
  CHECK(c5 == Graph::cycle(5));
  CHECK(mdim::encode_graph6(Graph::cycle(5)) == "Dhc");
}

TEST_CASE("graph6 header and error paths") {
  CHECK(mdim::parse_graph6(">>graph6<<A_") == Graph::complete(2));
  CHECK_THROWS_AS(mdim::parse_graph6(""), mdim::parse_error);
  CHECK_THROWS_AS(mdim::parse_graph6(" _"), mdim::parse_error);    // bad length byte
  CHECK_THROWS_AS(mdim::parse_graph6("~??A_"), mdim::parse_error); // long form
  CHECK_THROWS_AS(mdim::parse_graph6("A"), mdim::parse_error);     // truncated payload
  CHECK_THROWS_AS(mdim::parse_graph6("A__"), mdim::parse_error);   // trailing garbage
  CHECK_THROWS_AS(mdim::parse_graph6("A@"), mdim::parse_error);    // nonzero padding bits
  CHECK_THROWS_AS(mdim::parse_graph6("B\x1f"), mdim::parse_error); // payload byte outside 63..126
  CHECK_THROWS_AS(mdim::encode_graph6(Graph::empty(63)), std::invalid_argument);
}

TEST_CASE("graph6 matches the hand-packed reference encoder") {
  std::mt19937 rng(20260808);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 20);
    const Graph g = testutil::random_graph(rng, n, 0.4);
    const std::string enc = mdim::encode_graph6(g);
    CHECK(enc == testutil::g6_pack_reference(g));
    CHECK(mdim::parse_graph6(enc) == g);
  }
}

TEST_CASE("all_pairs_distances on small graphs") {
  const auto dm = mdim::all_pairs_distances(Graph::path(3));
  CHECK(dm.dist(0, 2) == 2);
  CHECK(dm.dist(0, 1) == 1);
  CHECK(dm.diameter() == 2);

  const auto c5 = mdim::all_pairs_distances(Graph::cycle(5));
  CHECK(c5.dist(0, 3) == 2);
  CHECK(c5.diameter() == 2);

  const Graph two_edges = Graph::from_edge_list(4, {{0, 1}, {2, 3}});
  const auto dm2 = mdim::all_pairs_distances(two_edges);
  CHECK_FALSE(dm2.reachable(0, 2));
  CHECK_THROWS_AS(dm2.dist(0, 2), std::domain_error);
  CHECK(dm2.dist(0, 1) == 1);
  CHECK(dm2.diameter() == 1);
}

TEST_CASE("distance matrix laws on random graphs") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 12);
    const Graph g = testutil::random_graph(rng, n, 0.35);
    const auto dm = mdim::all_pairs_distances(g);

    int degree_sum = 0;
    for (int v = 0; v < n; ++v) degree_sum += g.degree(v);
    CHECK(degree_sum == 2 * g.edge_count());

    for (int u = 0; u < n; ++u) {
      CHECK(dm.dist(u, u) == 0);
      for (int v = 0; v < n; ++v) {
        CHECK(dm.reachable(u, v) == dm.reachable(v, u));
        if (!dm.reachable(u, v)) continue;
        CHECK(dm.dist(u, v) == dm.dist(v, u));
        CHECK((dm.dist(u, v) == 1) == g.adjacent(u, v));
        if (u != v) CHECK(dm.dist(u, v) >= 1);
        for (int w = 0; w < n; ++w) {
          if (!dm.reachable(v, w) || !dm.reachable(u, w)) continue;
          CHECK(dm.dist(u, w) <= dm.dist(u, v) + dm.dist(v, w));
        }
      }
    }
  }
}

TEST_CASE("distance matrix laws on the whole small corpus") {
  for (int n = 1; n <= 6; ++n) {
    for (const Graph& g : testutil::corpus(n)) {
      const auto dm = mdim::all_pairs_distances(g);
      for (int u = 0; u < n; ++u) {
        CHECK(dm.dist(u, u) == 0);
        for (int v = u + 1; v < n; ++v) {
          CHECK(dm.dist(u, v) == dm.dist(v, u));
          CHECK((dm.dist(u, v) == 1) == g.adjacent(u, v));
          for (int w = 0; w < n; ++w) {
            CHECK(dm.dist(u, w) <= dm.dist(u, v) + dm.dist(v, w));
          }
        }
      }
    }
  }
}

TEST_CASE("is_connected") {
  CHECK(mdim::is_connected(Graph::cycle(6)));
  CHECK(mdim::is_connected(Graph::complete(1)));
  const Graph triangles =
      Graph::from_edge_list(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}});
  CHECK_FALSE(mdim::is_connected(triangles));
}

TEST_CASE("edge-list text format") {
  const Graph g = mdim::parse_edge_list_text("4 4\n0 1\n1 2\n2 3\n3 0\n");
  CHECK(g == Graph::cycle(4));

  CHECK_THROWS_AS(mdim::parse_edge_list_text(""), mdim::parse_error);
  CHECK_THROWS_AS(mdim::parse_edge_list_text("3 2\n0 1\n"), mdim::parse_error);
  CHECK_THROWS_AS(mdim::parse_edge_list_text("3 1\n0 0\n"), mdim::parse_error);
  CHECK_THROWS_AS(mdim::parse_edge_list_text("3 1\n0 7\n"), mdim::parse_error);
  CHECK_THROWS_AS(mdim::parse_edge_list_text("3 1\n0 1\n0 2\n"), mdim::parse_error);
  CHECK_THROWS_AS(mdim::parse_edge_list_text("0 0\n"), mdim::parse_error);
}

TEST_CASE("join and disjoint_union") {
  const Graph star = Graph::join(Graph::empty(1), Graph::empty(3));
  CHECK(star == Graph::complete_bipartite(1, 3));

  const Graph two_triangles = Graph::disjoint_union(Graph::complete(3), Graph::complete(3));
  CHECK(two_triangles.order() == 6);
  CHECK(two_triangles.edge_count() == 6);
  CHECK_FALSE(mdim::is_connected(two_triangles));

  CHECK(Graph::join(Graph::complete(2), Graph::empty(3)).edge_count() == 1 + 6);
}
