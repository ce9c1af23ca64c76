// Copyright 2026 The ghom Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

#include "ghom/graph.hpp"
#include "test_util.hpp"

namespace ghom {
namespace {

void expect_simple_connected(const Graph& g) {
  std::size_t degree_sum = 0;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    const auto nb = g.neighbors(v);
    EXPECT_TRUE(std::is_sorted(nb.begin(), nb.end()));
    EXPECT_EQ(std::adjacent_find(nb.begin(), nb.end()), nb.end()) << "duplicate neighbor";
    for (Vertex u : nb) {
      EXPECT_NE(u, v);
      EXPECT_TRUE(g.adjacent(u, v));
    }
    degree_sum += nb.size();
  }
  EXPECT_EQ(degree_sum, 2 * g.edge_count());
  for (auto d : g.distances_from(g.anchor())) EXPECT_LT(d, g.vertex_count());
}

TEST(Generators, LayeredCycleSmallestIsK22) {
  const Graph g = layered_cycle(2, 2);
  EXPECT_EQ(g.vertex_count(), 4u);
  EXPECT_EQ(g.edge_count(), 4u);
  for (Vertex a : {0u, 1u}) {
    for (Vertex b : {2u, 3u}) EXPECT_TRUE(g.adjacent(a, b));
  }
  EXPECT_FALSE(g.adjacent(0, 1));
  EXPECT_FALSE(g.adjacent(2, 3));
}

TEST(Generators, TorusFiveIsFourRegular) {
  const Graph g = torus_graph(5);
  EXPECT_EQ(g.vertex_count(), 25u);
  for (Vertex v = 0; v < 25; ++v) EXPECT_EQ(g.neighbors(v).size(), 4u);
  EXPECT_FALSE(g.is_bipartite());
}

TEST(Generators, LayeredCycleDegreeIsTwoK) {
  const Graph g = layered_cycle(4, 3);
  for (Vertex v = 0; v < g.vertex_count(); ++v) EXPECT_EQ(g.neighbors(v).size(), 6u);
  // (i, s) is flattened to i*k + s.
  EXPECT_TRUE(g.adjacent(0 * 3 + 2, 1 * 3 + 0));
  EXPECT_TRUE(g.adjacent(3 * 3 + 1, 0 * 3 + 1));
  EXPECT_FALSE(g.adjacent(1 * 3 + 0, 1 * 3 + 1));
}

TEST(Generators, AllFamiliesAreSimpleAndConnected) {
  for (const char* spec : {"path:1", "path:10", "cycle:3", "cycle:8", "torus:2", "torus:3",
                           "torus:5", "cnk:2:1", "cnk:2:3", "cnk:6:2", "cnk:5:2", "hypercube:1",
                           "hypercube:4"}) {
    SCOPED_TRACE(spec);
    const Graph g = generate(parse_generator_spec(spec));
    expect_simple_connected(g);
    EXPECT_EQ(g.anchor(), 0u);
  }
}

TEST(Generators, Sizes) {
  EXPECT_EQ(path_graph(10).vertex_count(), 11u);
  EXPECT_EQ(cycle_graph(8).edge_count(), 8u);
  EXPECT_EQ(hypercube_graph(3).edge_count(), 12u);
  EXPECT_EQ(layered_cycle(6, 2).edge_count(), 6u * 4u);
  EXPECT_TRUE(hypercube_graph(3).is_bipartite());
  EXPECT_FALSE(cycle_graph(7).is_bipartite());
  EXPECT_TRUE(torus_graph(4).is_bipartite());
}

TEST(Generators, SpecParsingAndErrors) {
  const auto s = parse_generator_spec("cnk:4:3");
  EXPECT_EQ(s.kind, GraphKind::kLayeredCycle);
  EXPECT_EQ(s.n, 4u);
  EXPECT_EQ(s.k, 3u);
  EXPECT_EQ(parse_generator_spec(to_string(s)).n, 4u);
  EXPECT_THROW(parse_generator_spec("wheel:4"), std::invalid_argument);
  EXPECT_THROW(parse_generator_spec("path:x"), std::invalid_argument);
  EXPECT_THROW(generate(parse_generator_spec("path:0")), std::invalid_argument);
  GeneratorSpec odd = parse_generator_spec("cycle:7");
  EXPECT_NO_THROW(generate(odd));
  odd.require_bipartite = true;
  EXPECT_THROW(generate(odd), std::invalid_argument);
  GeneratorSpec odd_cnk = parse_generator_spec("cnk:5:2");
  odd_cnk.require_bipartite = true;
  EXPECT_THROW(generate(odd_cnk), std::invalid_argument);
}

TEST(Graph, RejectsMalformedInput) {
  const std::vector<Edge> loop{{0, 0}};
  EXPECT_THROW(Graph("x", 1, loop), std::invalid_argument);
  const std::vector<Edge> dup{{0, 1}, {1, 0}};
  EXPECT_THROW(Graph("x", 2, dup), std::invalid_argument);
  const std::vector<Edge> split{{0, 1}, {2, 3}};
  EXPECT_THROW(Graph("x", 4, split), std::invalid_argument);
  const std::vector<Edge> one{{0, 1}};
  EXPECT_THROW(Graph("x", 2, one, 2), std::invalid_argument);
}

TEST(Graph, EdgeListRoundTrip) {
  const Graph g = layered_cycle(4, 2).with_anchor(3);
  std::stringstream buf;
  write_edge_list(g, buf);
  const Graph h = read_edge_list(buf);
  EXPECT_EQ(h.vertex_count(), g.vertex_count());
  EXPECT_EQ(h.anchor(), 3u);
  EXPECT_EQ(h.edges(), g.edges());

  std::istringstream text("# a triangle-free square\n4 0\n0 1\n1 2\n\n2 3\n3 0\n");
  EXPECT_EQ(read_edge_list(text).edge_count(), 4u);
  std::istringstream bad("3\n0 1\n");
  EXPECT_THROW(read_edge_list(bad), std::invalid_argument);
}

TEST(Balls, PathCenterOne) {
  const Ball b = ball(path_graph(3), 1, 1);
  EXPECT_EQ(b.members, (std::vector<Vertex>{0, 1, 2}));
  EXPECT_EQ(b.boundary, (std::vector<Vertex>{0, 2}));
  EXPECT_TRUE(b.exact);
}

TEST(Balls, RadiusZeroIsTheCenter) {
  const Graph g = torus_graph(4);
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    const Ball b = ball(g, v, 0);
    EXPECT_EQ(b.members, std::vector<Vertex>{v});
    EXPECT_EQ(b.boundary, std::vector<Vertex>{v});
    EXPECT_TRUE(b.exact);
  }
}

TEST(Balls, TorusUnitBall) { EXPECT_EQ(ball(torus_graph(5), 0, 1).members.size(), 5u); }

TEST(Balls, NotExactWhenRadiusExceedsEccentricity) {
  const Ball b = ball(path_graph(2), 1, 2);
  EXPECT_EQ(b.members.size(), 3u);
  EXPECT_TRUE(b.boundary.empty());
  EXPECT_FALSE(b.exact);
}

TEST(Balls, MaxBallSize) {
  EXPECT_EQ(max_ball_size(path_graph(10), 2), 5u);
  EXPECT_EQ(max_ball_size(cycle_graph(9), 0), 1u);
  for (std::size_t n = 2; n <= 8; ++n) {
    for (std::size_t r = 0; r <= 4; ++r) {
      EXPECT_LE(max_ball_size(torus_graph(n), r), (2 * r + 1) * (2 * r + 1));
    }
  }
}

TEST(Balls, MonotoneAndDegreeBound) {
  Rng rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 2 + uniform_below(std::uint64_t{30}, rng);
    const Graph g = testing::random_connected_graph(n, uniform_below(std::uint64_t{n}, rng), rng);
    const double d = static_cast<double>(g.max_degree());
    for (std::size_t r = 0; r < 4; ++r) {
      const Vertex c = static_cast<Vertex>(uniform_below(std::uint64_t{n}, rng));
      const auto small = ball(g, c, r).members;
      const auto big = ball(g, c, r + 1).members;
      EXPECT_TRUE(std::includes(big.begin(), big.end(), small.begin(), small.end()));
      EXPECT_LE(static_cast<double>(max_ball_size(g, r)), std::pow(d + 1.0, static_cast<double>(r)));
    }
  }
}

void expect_ball_packing(const Graph& g, std::size_t r, std::span<const Vertex> forbidden) {
  const auto balls = disjoint_exact_balls(g, r, forbidden);
  std::set<Vertex> seen;
  for (const Ball& b : balls) {
    EXPECT_TRUE(b.exact);
    EXPECT_EQ(b.radius, r);
    for (Vertex v : b.members) {
      EXPECT_TRUE(seen.insert(v).second) << "balls overlap at " << v;
      EXPECT_EQ(std::count(forbidden.begin(), forbidden.end(), v), 0);
    }
  }
  const std::size_t s = max_ball_size(g, r);
  const std::size_t avail = g.vertex_count() - forbidden.size();
  const std::size_t q = avail / (s * s);
  EXPECT_GE(balls.size(), q > 0 ? q - 1 : 0);
}

TEST(DisjointBalls, PathNine) {
  const auto balls = disjoint_exact_balls(path_graph(9), 1);
  EXPECT_GE(balls.size(), 1u);
  expect_ball_packing(path_graph(9), 1, {});
}

TEST(DisjointBalls, RadiusZeroTakesEveryVertex) {
  const Graph g = cycle_graph(6);
  const Vertex forbidden[] = {2};
  const auto balls = disjoint_exact_balls(g, 0, forbidden);
  ASSERT_EQ(balls.size(), 5u);
  for (const Ball& b : balls) EXPECT_EQ(b.members.size(), 1u);
}

TEST(DisjointBalls, CycleEight) { expect_ball_packing(cycle_graph(8), 2, {}); }

TEST(DisjointBalls, RandomGraphsUpToFifty) {
  Rng rng(2024);
  for (int trial = 0; trial < 150; ++trial) {
    const std::size_t n = 1 + uniform_below(std::uint64_t{50}, rng);
    const Graph g = testing::random_connected_graph(n, uniform_below(std::uint64_t{n + 1}, rng), rng);
    for (std::size_t r = 0; r <= 3; ++r) {
      expect_ball_packing(g, r, {});
      const Vertex anchor = g.anchor();
      expect_ball_packing(g, r, std::span<const Vertex>(&anchor, 1));
    }
  }
}

}  // namespace
}  // namespace ghom
