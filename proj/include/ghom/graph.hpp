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

#ifndef GHOM_GRAPH_HPP_
#define GHOM_GRAPH_HPP_

#include <cstddef>
#include <cstdint>
#include <istream>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace ghom {

using Vertex = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;

/// Immutable simple, undirected, connected graph with a distinguished anchor
/// vertex. Vertices are the dense indices 0..vertex_count()-1.
///
/// Bipartiteness is computed once at construction; homomorphisms into the
/// integer line exist exactly when it holds.
class Graph {
 public:
  /// Throws std::invalid_argument on self-loops, duplicate edges, out of range
  /// endpoints, a disconnected edge set, or an anchor outside the graph.
  Graph(std::string name, std::size_t vertex_count, std::span<const Edge> edges,
        Vertex anchor = 0);

  std::size_t vertex_count() const { return adjacency_.size(); }
  std::size_t edge_count() const { return edge_count_; }
  Vertex anchor() const { return anchor_; }
  const std::string& name() const { return name_; }
  bool is_bipartite() const { return bipartite_; }
  std::size_t max_degree() const;

  /// Sorted neighbor list.
  std::span<const Vertex> neighbors(Vertex v) const { return adjacency_.at(v); }
  bool adjacent(Vertex u, Vertex v) const;

  /// Edges as (u, v) with u < v, lexicographically ordered.
  std::vector<Edge> edges() const;

  /// Graph distances from `source`.
  std::vector<std::size_t> distances_from(Vertex source) const;

  /// Vertices in breadth-first order from the anchor, neighbors visited in
  /// increasing index order.
  std::vector<Vertex> bfs_order() const;

  /// Same graph with a different anchor.
  Graph with_anchor(Vertex anchor) const;

 private:
  std::string name_;
  std::vector<std::vector<Vertex>> adjacency_;
  std::size_t edge_count_ = 0;
  Vertex anchor_ = 0;
  bool bipartite_ = false;
};

using GraphPtr = std::shared_ptr<const Graph>;

enum class GraphKind { kPath, kCycle, kTorus, kLayeredCycle, kHypercube };

/// Parameters of a standard graph family.
///
///   path(n)        vertices 0..n, edges {i, i+1}
///   cycle(n)       Z_n, edges {i, i+1 mod n}; n >= 3
///   torus(n)       Z_n x Z_n, (i,j) ~ (i+1,j), (i,j) ~ (i,j+1); vertex i*n+j
///   cnk(n, k)      layered cycle: Z_n x [k], (i,s) ~ (i+1,t) for all s,t;
///                  vertex (i,s) is i*k + (s-1), anchor (0,1) = vertex 0
///   hypercube(d)   {0,1}^d, edges between words at Hamming distance 1
///
/// Parallel relations collapse to a single edge (cnk with n = 2 is K_{k,k},
/// torus with n = 2 is the 4-cycle).
struct GeneratorSpec {
  GraphKind kind = GraphKind::kPath;
  std::size_t n = 1;
  std::size_t k = 1;
  /// Reject parameter choices that yield a non-bipartite graph.
  bool require_bipartite = false;
};

/// Parses "path:10", "cycle:8", "torus:5", "cnk:4:3", "hypercube:3".
GeneratorSpec parse_generator_spec(std::string_view text);
std::string to_string(const GeneratorSpec& spec);

Graph generate(const GeneratorSpec& spec);

Graph path_graph(std::size_t n);
Graph cycle_graph(std::size_t n);
Graph torus_graph(std::size_t n);
Graph layered_cycle(std::size_t n, std::size_t k);
Graph hypercube_graph(std::size_t d);

/// Edge-list text: first line "n anchor", then one "u v" pair per line.
Graph read_edge_list(std::istream& in, std::string name = "edge-list");
void write_edge_list(const Graph& g, std::ostream& out);

/// Closed ball B_r(center) and its boundary.
struct Ball {
  Vertex center = 0;
  std::size_t radius = 0;
  /// Sorted vertex set.
  std::vector<Vertex> members;
  /// members[i] is at graph distance depth[i] from the center.
  std::vector<std::size_t> depth;
  /// Members outside B_{radius-1}; all members when radius == 0.
  std::vector<Vertex> boundary;
  /// Some member lies at distance >= radius from the center.
  bool exact = false;

  bool contains(Vertex v) const;
};

Ball ball(const Graph& g, Vertex center, std::size_t radius);

/// V(r): the largest ball of radius r over all centers.
std::size_t max_ball_size(const Graph& g, std::size_t radius);

/// Greedy family of pairwise disjoint exact-radius balls, none containing a
/// forbidden vertex. Centers are taken lowest index first; after each pick
/// every vertex within distance 2r of the chosen center stops being a
/// candidate, so the balls are pairwise disjoint and each pick removes at most
/// S^2 candidates (S = max_ball_size(g, r)). With at most one forbidden vertex
/// this yields at least floor(|G \ forbidden| / S^2) - 1 balls.
std::vector<Ball> disjoint_exact_balls(const Graph& g, std::size_t radius,
                                       std::span<const Vertex> forbidden = {});

}  // namespace ghom

#endif  // GHOM_GRAPH_HPP_
