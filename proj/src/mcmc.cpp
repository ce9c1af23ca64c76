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

#include "ghom/mcmc.hpp"

#include <algorithm>
#include <stdexcept>

namespace ghom {

std::vector<Height> parity_labeling(const Graph& g) {
  const auto dist = g.distances_from(g.anchor());
  std::vector<Height> values(dist.size());
  for (std::size_t v = 0; v < dist.size(); ++v) values[v] = static_cast<Height>(dist[v] % 2);
  return values;
}

std::vector<Height> allowed_values(const Graph& g, std::span<const Height> values, Vertex v) {
  std::vector<Height> out;
  const auto nbrs = g.neighbors(v);
  if (nbrs.empty()) return out;
  const Height base = values[nbrs[0]];
  for (Height candidate : {base - 1, base + 1}) {
    bool ok = true;
    for (Vertex u : nbrs) {
      const Height d = candidate - values[u];
      if (d != 1 && d != -1) {
        ok = false;
        break;
      }
    }
    if (ok) out.push_back(candidate);
  }
  return out;
}

double transition_probability(const Graph& g, std::span<const Height> from,
                              std::span<const Height> to) {
  const std::size_t n = g.vertex_count();
  if (n < 2) return std::equal(from.begin(), from.end(), to.begin(), to.end()) ? 1.0 : 0.0;
  const double pick = 1.0 / static_cast<double>(n - 1);
  std::size_t differing = 0;
  Vertex where = 0;
  for (Vertex v = 0; v < n; ++v) {
    if (from[v] != to[v]) {
      ++differing;
      where = v;
    }
  }
  if (differing > 1 || (differing == 1 && where == g.anchor())) return 0.0;
  if (differing == 1) {
    const auto a = allowed_values(g, from, where);
    for (Height x : a) {
      if (x == to[where]) return pick / static_cast<double>(a.size());
    }
    return 0.0;
  }
  double stay = 0.0;
  for (Vertex v = 0; v < n; ++v) {
    if (v == g.anchor()) continue;
    const auto a = allowed_values(g, from, v);
    stay += pick / static_cast<double>(a.size());
  }
  return stay;
}

HeatBathChain::HeatBathChain(Homomorphism start, std::uint64_t seed)
    : graph_(start.graph_ptr()), values_(start.values().begin(), start.values().end()),
      rng_(seed) {
  if (!validate(start)) throw std::invalid_argument("chain start must be anchored");
}

Homomorphism HeatBathChain::current() const {
  return Homomorphism::anchored(graph_, values_);
}

void HeatBathChain::step() {
  const Graph& g = *graph_;
  ++steps_;
  const std::size_t n = g.vertex_count();
  if (n < 2) return;
  auto v = static_cast<Vertex>(uniform_below(std::uint64_t{n - 1}, rng_));
  if (v >= g.anchor()) ++v;
  const auto a = allowed_values(g, values_, v);
  values_[v] = a.size() == 1 ? a[0] : a[uniform_below(std::uint64_t{2}, rng_)];
}

void HeatBathChain::run(std::uint64_t steps) {
  for (std::uint64_t i = 0; i < steps; ++i) step();
}

std::vector<RangeStats> run_chain(const GraphPtr& g, std::uint64_t burn_in,
                                  std::uint64_t thin, std::uint64_t draws,
                                  std::uint64_t seed) {
  if (!g->is_bipartite()) throw std::invalid_argument("mcmc needs a bipartite graph");
  if (burn_in == 0 || thin == 0) throw std::invalid_argument("burn_in and thin must be >= 1");
  HeatBathChain chain(Homomorphism::anchored(g, parity_labeling(*g)), seed);
  chain.run(burn_in);
  std::vector<RangeStats> out;
  out.reserve(draws);
  for (std::uint64_t d = 0; d < draws; ++d) {
    chain.run(thin);
    out.push_back(range(chain.values()));
  }
  return out;
}

}  // namespace ghom
