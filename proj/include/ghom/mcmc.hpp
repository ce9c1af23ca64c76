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

#ifndef GHOM_MCMC_HPP_
#define GHOM_MCMC_HPP_

#include <cstdint>
#include <vector>

#include "ghom/bignum.hpp"
#include "ghom/homomorphism.hpp"

namespace ghom {

/// Single-site heat-bath chain on Hom_{anchor}(G, Z).
///
/// A step picks a uniform non-anchor vertex v and redraws f(v) uniformly from
/// A(v) = intersection over neighbors u of {f(u) - 1, f(u) + 1}. A(v) depends
/// only on the neighbors, so the move f -> g and its reverse have the same
/// probability and the uniform measure is stationary.
class HeatBathChain {
 public:
  /// Starts from `start`, which must be an anchored homomorphism.
  HeatBathChain(Homomorphism start, std::uint64_t seed);

  void step();
  void run(std::uint64_t steps);

  /// The current state, re-validated.
  Homomorphism current() const;
  std::span<const Height> values() const { return values_; }
  const Graph& graph() const { return *graph_; }
  std::uint64_t step_count() const { return steps_; }

 private:
  GraphPtr graph_;
  std::vector<Height> values_;
  Rng rng_;
  std::uint64_t steps_ = 0;
};

/// Values of the parity labeling: BFS distance from the anchor mod 2. A
/// homomorphism exactly when g is bipartite.
std::vector<Height> parity_labeling(const Graph& g);

/// Allowed values for v given every other value (size 1 or 2 for a valid f).
std::vector<Height> allowed_values(const Graph& g, std::span<const Height> values, Vertex v);

/// Probability that one step moves `from` to `to`: for states differing at
/// exactly one vertex v, 1/(|G|-1) * 1/|A(v)|; for from == to the holding
/// probability; otherwise 0.
double transition_probability(const Graph& g, std::span<const Height> from,
                              std::span<const Height> to);

/// Runs burn_in steps from the parity labeling, then records range statistics
/// every thin steps until `draws` records are taken. Throws
/// std::invalid_argument for non-bipartite graphs or burn_in/thin == 0.
std::vector<RangeStats> run_chain(const GraphPtr& g, std::uint64_t burn_in,
                                  std::uint64_t thin, std::uint64_t draws,
                                  std::uint64_t seed);

}  // namespace ghom

#endif  // GHOM_MCMC_HPP_
