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

#ifndef GHOM_EXPERIMENT_HPP_
#define GHOM_EXPERIMENT_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ghom/report.hpp"

namespace ghom {

enum class ExperimentId { kThresholdUpper, kThresholdLower, kTheorem1, kBridgeRange, kTorus };

std::string to_string(ExperimentId id);
ExperimentId parse_experiment_id(const std::string& text);

/// Parameter grid of one experiment. Unused fields are ignored by a given id.
///
///   threshold-upper  n x psi with k = ceil(2 log2 n + psi), or n x k if `k` is set
///   threshold-lower  n x psi with k = floor(2 log2 n - psi), beta, eps
///   theorem1         graphs, r, c
///   bridge-range     n (bridge lengths) x alpha
///   torus            n (side lengths), r
///
/// Each psi value is a constant function of n.
struct ExperimentSpec {
  ExperimentId id = ExperimentId::kThresholdUpper;
  std::vector<std::size_t> n;
  std::vector<std::size_t> k;
  std::vector<double> psi;
  std::optional<double> beta;  // default 2^{psi/2} / 8
  double eps = 0.1;
  std::vector<double> alpha;
  std::size_t r = 2;
  double c = 0.5;
  std::vector<std::string> graphs;
  std::uint64_t draws = 0;  // 0: the experiment's default
  std::uint64_t seed = 0;
};

/// Grid used when the caller leaves a list empty.
ExperimentSpec default_spec(ExperimentId id);

/// Fills empty grid lists from default_spec and enforces the preconditions:
/// non-empty grid, draws >= 1, eps in (0, 1/8], 0 < beta <= n/4, psi
/// non-decreasing, k >= 1, even sizes where required. Throws std::invalid_argument.
ExperimentSpec normalized(ExperimentSpec spec);

/// Runs every grid point (in parallel, each with the stream derive_seed(seed, i))
/// and merges the rows in grid order.
ExperimentReport run_experiment(const ExperimentSpec& spec);

ExperimentReport run_threshold_upper(const ExperimentSpec& spec);
ExperimentReport run_threshold_lower(const ExperimentSpec& spec);
ExperimentReport run_theorem1(const ExperimentSpec& spec);
ExperimentReport run_bridge_range(const ExperimentSpec& spec);
ExperimentReport run_torus(const ExperimentSpec& spec);

/// ceil(alpha sqrt(m)), tolerant of round-off in alpha (0.1 * 10 is 1, not 2).
std::uint64_t bridge_level(std::uint64_t m, double alpha);

}  // namespace ghom

#endif  // GHOM_EXPERIMENT_HPP_
