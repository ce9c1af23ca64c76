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

#include "ghom/homomorphism.hpp"

#include <algorithm>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <string>

namespace ghom {

bool is_homomorphism(const Graph& g, std::span<const Height> values,
                     bool require_anchor) {
  if (values.size() != g.vertex_count()) return false;
  if (require_anchor && values[g.anchor()] != 0) return false;
  for (Vertex u = 0; u < g.vertex_count(); ++u) {
    for (Vertex w : g.neighbors(u)) {
      const Height d = values[u] - values[w];
      if (d != 1 && d != -1) return false;
    }
  }
  return true;
}

Homomorphism Homomorphism::anchored(GraphPtr graph, std::vector<Height> values) {
  if (!graph) throw std::invalid_argument("null graph");
  if (!is_homomorphism(*graph, values, true)) {
    throw std::invalid_argument("not an anchored homomorphism of " + graph->name());
  }
  return Homomorphism(std::move(graph), std::move(values));
}

Homomorphism Homomorphism::anchor_free(GraphPtr graph, std::vector<Height> values) {
  if (!graph) throw std::invalid_argument("null graph");
  if (!is_homomorphism(*graph, values, false)) {
    throw std::invalid_argument("not a homomorphism of " + graph->name());
  }
  return Homomorphism(std::move(graph), std::move(values));
}

bool validate(const Homomorphism& h) {
  return is_homomorphism(h.graph(), h.values(), true);
}

RangeStats range(std::span<const Height> values) {
  RangeStats stats;
  if (values.empty()) return stats;
  stats.range_set.assign(values.begin(), values.end());
  std::sort(stats.range_set.begin(), stats.range_set.end());
  stats.range_set.erase(std::unique(stats.range_set.begin(), stats.range_set.end()),
                        stats.range_set.end());
  stats.min = stats.range_set.front();
  stats.max = stats.range_set.back();
  stats.range_size = stats.range_set.size();
  return stats;
}

Homomorphism reflect(const Homomorphism& h) {
  std::vector<Height> v(h.values().begin(), h.values().end());
  for (auto& x : v) x = -x;
  return Homomorphism::anchor_free(h.graph_ptr(), std::move(v));
}

Homomorphism translate(const Homomorphism& h, Height z) {
  std::vector<Height> v(h.values().begin(), h.values().end());
  for (auto& x : v) x += z;
  return Homomorphism::anchor_free(h.graph_ptr(), std::move(v));
}

Homomorphism repair_ball(const Homomorphism& h, const Ball& b) {
  const Graph& g = h.graph();
  if (!b.exact) throw std::invalid_argument("repair_ball: ball is not of exact radius");
  if (b.members.empty() || b.members.back() >= g.vertex_count() ||
      b.depth.size() != b.members.size()) {
    throw std::invalid_argument("repair_ball: ball does not belong to this graph");
  }
  if (b.contains(g.anchor())) {
    throw std::invalid_argument("repair_ball: ball contains the anchor");
  }

  Height offset = std::numeric_limits<Height>::max();
  for (Vertex u : b.boundary) offset = std::min(offset, h[u]);

  std::vector<Height> local(b.members.size());
  for (std::size_t i = 0; i < b.members.size(); ++i) {
    local[i] = h[b.members[i]] - offset;
    if (local[i] < 0) local[i] = -local[i];
  }
  const auto r = static_cast<Height>(b.radius);
  for (Height step = 1; step <= r; ++step) {
    const auto inner = static_cast<std::size_t>(r - step);
    for (std::size_t i = 0; i < local.size(); ++i) {
      if (b.depth[i] <= inner && local[i] == step - 1) local[i] = step + 1;
    }
  }

  std::vector<Height> out(h.values().begin(), h.values().end());
  for (std::size_t i = 0; i < b.members.size(); ++i) out[b.members[i]] = local[i] + offset;
  return Homomorphism::anchor_free(h.graph_ptr(), std::move(out));
}

void write_homomorphism(const Homomorphism& h, std::ostream& out) {
  for (std::size_t v = 0; v < h.size(); ++v) out << v << ' ' << h.values()[v] << '\n';
}

std::vector<Height> read_values(std::size_t vertex_count, std::istream& in) {
  std::vector<Height> values(vertex_count, 0);
  std::vector<bool> seen(vertex_count, false);
  std::string line;
  std::size_t count = 0;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::istringstream row(line);
    long long index = -1;
    long long value = 0;
    if (!(row >> index >> value) || index < 0 ||
        static_cast<std::size_t>(index) >= vertex_count) {
      throw std::invalid_argument("homomorphism: bad line '" + line + "'");
    }
    if (seen[index]) throw std::invalid_argument("homomorphism: vertex listed twice");
    seen[index] = true;
    values[index] = value;
    ++count;
  }
  if (count != vertex_count) throw std::invalid_argument("homomorphism: missing vertices");
  return values;
}

Homomorphism read_homomorphism(GraphPtr graph, std::istream& in) {
  auto values = read_values(graph->vertex_count(), in);
  return Homomorphism::anchor_free(std::move(graph), std::move(values));
}

}  // namespace ghom
