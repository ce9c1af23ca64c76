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

#include "ghom/graph.hpp"

#include <algorithm>
#include <charconv>
#include <deque>
#include <limits>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>

namespace ghom {
namespace {

constexpr std::size_t kUnreached = std::numeric_limits<std::size_t>::max();

std::vector<std::size_t> bfs_distances(
    const std::vector<std::vector<Vertex>>& adjacency, Vertex source,
    std::size_t limit = kUnreached) {
  std::vector<std::size_t> dist(adjacency.size(), kUnreached);
  std::deque<Vertex> queue{source};
  dist[source] = 0;
  while (!queue.empty()) {
    const Vertex u = queue.front();
    queue.pop_front();
    if (dist[u] == limit) continue;
    for (Vertex w : adjacency[u]) {
      if (dist[w] == kUnreached) {
        dist[w] = dist[u] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

Graph from_edge_set(std::string name, std::size_t n, const std::set<Edge>& edges,
                    Vertex anchor = 0) {
  std::vector<Edge> list(edges.begin(), edges.end());
  return Graph(std::move(name), n, list, anchor);
}

Edge ordered(Vertex u, Vertex v) { return u < v ? Edge{u, v} : Edge{v, u}; }

std::size_t parse_size(std::string_view text, std::string_view what) {
  std::size_t value = 0;
  const auto* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end) {
    throw std::invalid_argument("bad " + std::string(what) + ": '" +
                                std::string(text) + "'");
  }
  return value;
}

}  // namespace

Graph::Graph(std::string name, std::size_t vertex_count,
             std::span<const Edge> edges, Vertex anchor)
    : name_(std::move(name)), adjacency_(vertex_count), anchor_(anchor) {
  if (vertex_count == 0) throw std::invalid_argument("graph has no vertices");
  if (vertex_count > std::numeric_limits<Vertex>::max()) {
    throw std::invalid_argument("graph too large");
  }
  if (anchor >= vertex_count) throw std::invalid_argument("anchor out of range");
  for (auto [u, v] : edges) {
    if (u >= vertex_count || v >= vertex_count) {
      throw std::invalid_argument("edge endpoint out of range");
    }
    if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
    adjacency_[u].push_back(v);
    adjacency_[v].push_back(u);
  }
  for (auto& nbrs : adjacency_) {
    std::sort(nbrs.begin(), nbrs.end());
    if (std::adjacent_find(nbrs.begin(), nbrs.end()) != nbrs.end()) {
      throw std::invalid_argument("duplicate edge");
    }
  }
  edge_count_ = edges.size();

  // Two-color from the anchor; connectivity falls out of the same pass.
  const auto dist = bfs_distances(adjacency_, anchor_);
  if (std::find(dist.begin(), dist.end(), kUnreached) != dist.end()) {
    throw std::invalid_argument("graph '" + name_ + "' is not connected");
  }
  bipartite_ = true;
  for (Vertex u = 0; u < vertex_count && bipartite_; ++u) {
    for (Vertex w : adjacency_[u]) {
      if (dist[u] % 2 == dist[w] % 2) {
        bipartite_ = false;
        break;
      }
    }
  }
}

std::size_t Graph::max_degree() const {
  std::size_t d = 0;
  for (const auto& nbrs : adjacency_) d = std::max(d, nbrs.size());
  return d;
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  const auto& nbrs = adjacency_.at(u);
  return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (Vertex u = 0; u < adjacency_.size(); ++u) {
    for (Vertex w : adjacency_[u]) {
      if (u < w) out.emplace_back(u, w);
    }
  }
  return out;
}

std::vector<std::size_t> Graph::distances_from(Vertex source) const {
  if (source >= vertex_count()) throw std::out_of_range("vertex out of range");
  return bfs_distances(adjacency_, source);
}

std::vector<Vertex> Graph::bfs_order() const {
  std::vector<Vertex> order{anchor_};
  std::vector<bool> seen(vertex_count(), false);
  seen[anchor_] = true;
  for (std::size_t head = 0; head < order.size(); ++head) {
    for (Vertex w : adjacency_[order[head]]) {
      if (!seen[w]) {
        seen[w] = true;
        order.push_back(w);
      }
    }
  }
  return order;
}

Graph Graph::with_anchor(Vertex anchor) const {
  const auto e = edges();
  return Graph(name_, vertex_count(), e, anchor);
}

GeneratorSpec parse_generator_spec(std::string_view text) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  for (;;) {
    const auto colon = text.find(':', start);
    parts.push_back(text.substr(start, colon - start));
    if (colon == std::string_view::npos) break;
    start = colon + 1;
  }
  GeneratorSpec spec;
  const auto kind = parts.front();
  std::size_t expected = 2;
  if (kind == "path") {
    spec.kind = GraphKind::kPath;
  } else if (kind == "cycle") {
    spec.kind = GraphKind::kCycle;
  } else if (kind == "torus") {
    spec.kind = GraphKind::kTorus;
  } else if (kind == "hypercube") {
    spec.kind = GraphKind::kHypercube;
  } else if (kind == "cnk") {
    spec.kind = GraphKind::kLayeredCycle;
    expected = 3;
  } else {
    throw std::invalid_argument("unknown graph family '" + std::string(kind) + "'");
  }
  if (parts.size() != expected) {
    throw std::invalid_argument("malformed generator spec '" + std::string(text) + "'");
  }
  spec.n = parse_size(parts[1], "size");
  if (expected == 3) spec.k = parse_size(parts[2], "layer width");
  return spec;
}

std::string to_string(const GeneratorSpec& spec) {
  switch (spec.kind) {
    case GraphKind::kPath:
      return "path:" + std::to_string(spec.n);
    case GraphKind::kCycle:
      return "cycle:" + std::to_string(spec.n);
    case GraphKind::kTorus:
      return "torus:" + std::to_string(spec.n);
    case GraphKind::kLayeredCycle:
      return "cnk:" + std::to_string(spec.n) + ":" + std::to_string(spec.k);
    case GraphKind::kHypercube:
      return "hypercube:" + std::to_string(spec.n);
  }
  return "?";
}

Graph generate(const GeneratorSpec& spec) {
  if (spec.n == 0 || spec.k == 0) throw std::invalid_argument("graph size must be >= 1");
  const bool odd = spec.n % 2 == 1;
  switch (spec.kind) {
    case GraphKind::kPath:
      return path_graph(spec.n);
    case GraphKind::kCycle:
      if (spec.require_bipartite && odd) {
        throw std::invalid_argument("odd cycle is not bipartite");
      }
      return cycle_graph(spec.n);
    case GraphKind::kTorus:
      if (spec.require_bipartite && odd) {
        throw std::invalid_argument("odd torus is not bipartite");
      }
      return torus_graph(spec.n);
    case GraphKind::kLayeredCycle:
      if (spec.require_bipartite && odd) {
        throw std::invalid_argument("cnk with odd n is not bipartite");
      }
      return layered_cycle(spec.n, spec.k);
    case GraphKind::kHypercube:
      return hypercube_graph(spec.n);
  }
  throw std::invalid_argument("unknown graph family");
}

Graph path_graph(std::size_t n) {
  if (n == 0) throw std::invalid_argument("path length must be >= 1");
  std::vector<Edge> edges;
  for (Vertex i = 0; i < n; ++i) edges.emplace_back(i, i + 1);
  return Graph("path:" + std::to_string(n), n + 1, edges);
}

Graph cycle_graph(std::size_t n) {
  if (n < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
  std::vector<Edge> edges;
  for (Vertex i = 0; i < n; ++i) edges.emplace_back(i, static_cast<Vertex>((i + 1) % n));
  return Graph("cycle:" + std::to_string(n), n, edges);
}

Graph torus_graph(std::size_t n) {
  if (n < 2) throw std::invalid_argument("torus side must be >= 2");
  std::set<Edge> edges;
  auto id = [n](std::size_t i, std::size_t j) {
    return static_cast<Vertex>((i % n) * n + (j % n));
  };
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      edges.insert(ordered(id(i, j), id(i + 1, j)));
      edges.insert(ordered(id(i, j), id(i, j + 1)));
    }
  }
  return from_edge_set("torus:" + std::to_string(n), n * n, edges);
}

Graph layered_cycle(std::size_t n, std::size_t k) {
  if (n < 2) throw std::invalid_argument("cnk needs n >= 2");
  if (k == 0) throw std::invalid_argument("cnk needs k >= 1");
  std::set<Edge> edges;
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t next = (i + 1) % n;
    for (std::size_t s = 0; s < k; ++s) {
      for (std::size_t t = 0; t < k; ++t) {
        edges.insert(ordered(static_cast<Vertex>(i * k + s),
                             static_cast<Vertex>(next * k + t)));
      }
    }
  }
  return from_edge_set("cnk:" + std::to_string(n) + ":" + std::to_string(k), n * k,
                       edges);
}

Graph hypercube_graph(std::size_t d) {
  if (d == 0) throw std::invalid_argument("hypercube dimension must be >= 1");
  if (d > 24) throw std::invalid_argument("hypercube dimension too large");
  const std::size_t n = std::size_t{1} << d;
  std::vector<Edge> edges;
  for (std::size_t v = 0; v < n; ++v) {
    for (std::size_t b = 0; b < d; ++b) {
      const std::size_t w = v ^ (std::size_t{1} << b);
      if (v < w) edges.emplace_back(static_cast<Vertex>(v), static_cast<Vertex>(w));
    }
  }
  return Graph("hypercube:" + std::to_string(d), n, edges);
}

Graph read_edge_list(std::istream& in, std::string name) {
  std::string line;
  auto next_line = [&]() -> bool {
    while (std::getline(in, line)) {
      const auto first = line.find_first_not_of(" \t\r");
      if (first != std::string::npos && line[first] != '#') return true;
    }
    return false;
  };
  if (!next_line()) throw std::invalid_argument("edge list: missing header");
  std::istringstream header(line);
  long long n = -1, anchor = -1;
  if (!(header >> n >> anchor) || n <= 0 || anchor < 0) {
    throw std::invalid_argument("edge list: header must be 'n anchor'");
  }
  std::vector<Edge> edges;
  while (next_line()) {
    std::istringstream row(line);
    long long u = -1, v = -1;
    if (!(row >> u >> v) || u < 0 || v < 0) {
      throw std::invalid_argument("edge list: bad edge line '" + line + "'");
    }
    edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  return Graph(std::move(name), static_cast<std::size_t>(n), edges,
               static_cast<Vertex>(anchor));
}

void write_edge_list(const Graph& g, std::ostream& out) {
  out << g.vertex_count() << ' ' << g.anchor() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

bool Ball::contains(Vertex v) const {
  return std::binary_search(members.begin(), members.end(), v);
}

Ball ball(const Graph& g, Vertex center, std::size_t radius) {
  if (center >= g.vertex_count()) throw std::out_of_range("ball center out of range");
  // Distances are only needed up to radius; the BFS stops expanding there.
  std::vector<std::size_t> dist(g.vertex_count(), kUnreached);
  std::vector<Vertex> frontier{center};
  dist[center] = 0;
  for (std::size_t d = 0; d < radius && !frontier.empty(); ++d) {
    std::vector<Vertex> next;
    for (Vertex u : frontier) {
      for (Vertex w : g.neighbors(u)) {
        if (dist[w] == kUnreached) {
          dist[w] = d + 1;
          next.push_back(w);
        }
      }
    }
    frontier = std::move(next);
  }
  Ball b;
  b.center = center;
  b.radius = radius;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (dist[v] == kUnreached) continue;
    b.members.push_back(v);
    b.depth.push_back(dist[v]);
    if (dist[v] == radius) {
      b.boundary.push_back(v);
      b.exact = true;
    }
  }
  return b;
}

std::size_t max_ball_size(const Graph& g, std::size_t radius) {
  std::size_t best = 0;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    best = std::max(best, ball(g, v, radius).members.size());
  }
  return best;
}

std::vector<Ball> disjoint_exact_balls(const Graph& g, std::size_t radius,
                                       std::span<const Vertex> forbidden) {
  const std::size_t n = g.vertex_count();
  std::vector<bool> candidate(n, true);
  // A ball of radius r contains a forbidden vertex iff its center is within r.
  for (Vertex f : forbidden) {
    if (f >= n) throw std::out_of_range("forbidden vertex out of range");
    for (Vertex v : ball(g, f, radius).members) candidate[v] = false;
  }
  std::vector<Ball> out;
  for (Vertex v = 0; v < n; ++v) {
    if (!candidate[v]) continue;
    Ball b = ball(g, v, radius);
    if (!b.exact) continue;
    for (Vertex w : ball(g, v, 2 * radius).members) candidate[w] = false;
    out.push_back(std::move(b));
  }
  return out;
}

}  // namespace ghom
