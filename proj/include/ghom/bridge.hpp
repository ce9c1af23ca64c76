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

#ifndef GHOM_BRIDGE_HPP_
#define GHOM_BRIDGE_HPP_

#include <cstdint>
#include <span>
#include <vector>

#include "ghom/bignum.hpp"
#include "ghom/homomorphism.hpp"

namespace ghom {

/// A ±1 walk of even length m from 0 back to 0 (an element of P(m)).
class BridgePath {
 public:
  BridgePath() : positions_{0} {}
  /// Throws std::invalid_argument unless steps are ±1 and sum to zero.
  static BridgePath from_steps(std::span<const int> steps);
  /// Throws std::invalid_argument unless positions start and end at 0 with
  /// unit increments.
  static BridgePath from_positions(std::vector<Height> positions);

  std::size_t length() const { return positions_.size() - 1; }
  /// S_0..S_m.
  std::span<const Height> positions() const { return positions_; }
  std::vector<int> steps() const;
  /// Rng(S_0..S_m) as range statistics.
  RangeStats range() const { return ghom::range(positions_); }

  friend bool operator==(const BridgePath&, const BridgePath&) = default;

 private:
  explicit BridgePath(std::vector<Height> positions) : positions_(std::move(positions)) {}
  std::vector<Height> positions_;
};

/// |P(m)| = C(m, m/2). Throws std::invalid_argument for odd m.
BigCount bridge_count(std::uint64_t m);

/// Number of ±1 walks of length r from x to 0: C(r, (r + x)/2) when r >= |x|
/// and r = x (mod 2), else 0.
BigCount walks_to_origin(std::int64_t r, std::int64_t x);

/// Probability that a uniform bridge at height x with r steps left steps up:
/// walks_to_origin(r - 1, x + 1) / walks_to_origin(r, x).
Rational bridge_step_up_probability(std::int64_t x, std::int64_t r);

/// Exactly uniform element of P(m), built step by step. At height x with r
/// steps remaining the up-probability N(r-1, x+1)/N(r, x) reduces to u/r with
/// u = (r - x)/2 the number of up steps still owed, so each step is a single
/// exact uniform draw from [0, r).
BridgePath sample_bridge(std::uint64_t m, Rng& rng);

/// Reflects the part of the bridge after its first visit to level T > 0
/// around T: S'_j = S_j up to the first hit j*, 2T - S_j afterwards. The result
/// is a walk from 0 to 2T. Throws std::invalid_argument if T is never hit or
/// T <= 0.
std::vector<Height> reflect_at(const BridgePath& p, Height level);

/// Inverse of reflect_at: a walk from 0 to 2T is reflected after its first
/// visit to T, giving back the bridge.
BridgePath unreflect_at(std::span<const Height> walk, Height level);

/// True iff some S_j, j in [1, m], equals `level`.
bool hits(const BridgePath& p, Height level);

/// Pr[a uniform bridge of length m visits T] = C(m, m/2 - T) / C(m, m/2) for
/// 0 <= T <= m/2, and 0 above. Also a lower bound on Pr[range >= T].
Rational hitting_probability(std::uint64_t m, std::uint64_t level);

}  // namespace ghom

#endif  // GHOM_BRIDGE_HPP_
