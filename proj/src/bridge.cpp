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

#include "ghom/bridge.hpp"

#include <cstdlib>
#include <stdexcept>

namespace ghom {
namespace {

void require_even(std::uint64_t m) {
  if (m % 2 != 0) throw std::invalid_argument("bridge length must be even");
}

}  // namespace

BridgePath BridgePath::from_steps(std::span<const int> steps) {
  std::vector<Height> pos{0};
  pos.reserve(steps.size() + 1);
  for (int s : steps) {
    if (s != 1 && s != -1) throw std::invalid_argument("bridge step must be +-1");
    pos.push_back(pos.back() + s);
  }
  if (pos.back() != 0) throw std::invalid_argument("bridge must end at 0");
  return BridgePath(std::move(pos));
}

BridgePath BridgePath::from_positions(std::vector<Height> positions) {
  if (positions.empty() || positions.front() != 0 || positions.back() != 0) {
    throw std::invalid_argument("bridge must start and end at 0");
  }
  for (std::size_t i = 1; i < positions.size(); ++i) {
    const Height d = positions[i] - positions[i - 1];
    if (d != 1 && d != -1) throw std::invalid_argument("bridge step must be +-1");
  }
  return BridgePath(std::move(positions));
}

std::vector<int> BridgePath::steps() const {
  std::vector<int> out;
  out.reserve(length());
  for (std::size_t i = 1; i < positions_.size(); ++i) {
    out.push_back(static_cast<int>(positions_[i] - positions_[i - 1]));
  }
  return out;
}

BigCount bridge_count(std::uint64_t m) {
  require_even(m);
  return binomial(static_cast<std::int64_t>(m), static_cast<std::int64_t>(m / 2));
}

BigCount walks_to_origin(std::int64_t r, std::int64_t x) {
  if (r < 0 || std::llabs(x) > r || (r + x) % 2 != 0) return 0;
  return binomial(r, (r + x) / 2);
}

Rational bridge_step_up_probability(std::int64_t x, std::int64_t r) {
  const BigCount total = walks_to_origin(r, x);
  if (total == 0) throw std::invalid_argument("no bridge continuation from this state");
  return Rational(walks_to_origin(r - 1, x + 1), total);
}

BridgePath sample_bridge(std::uint64_t m, Rng& rng) {
  require_even(m);
  std::vector<Height> pos;
  pos.reserve(m + 1);
  pos.push_back(0);
  Height x = 0;
  for (std::uint64_t r = m; r > 0; --r) {
    const auto ups_owed = static_cast<std::uint64_t>((static_cast<Height>(r) - x) / 2);
    x += uniform_below(r, rng) < ups_owed ? 1 : -1;
    pos.push_back(x);
  }
  return BridgePath::from_positions(std::move(pos));
}

bool hits(const BridgePath& p, Height level) {
  const auto s = p.positions();
  for (std::size_t j = 1; j < s.size(); ++j) {
    if (s[j] == level) return true;
  }
  return false;
}

namespace {

std::vector<Height> reflect_after_first_hit(std::span<const Height> s, Height level) {
  if (level <= 0) throw std::invalid_argument("reflection level must be positive");
  std::size_t first = s.size();
  for (std::size_t j = 1; j < s.size(); ++j) {
    if (s[j] == level) {
      first = j;
      break;
    }
  }
  if (first == s.size()) throw std::invalid_argument("walk never reaches the level");
  std::vector<Height> out(s.begin(), s.end());
  for (std::size_t j = first + 1; j < out.size(); ++j) out[j] = 2 * level - s[j];
  return out;
}

}  // namespace

std::vector<Height> reflect_at(const BridgePath& p, Height level) {
  return reflect_after_first_hit(p.positions(), level);
}

BridgePath unreflect_at(std::span<const Height> walk, Height level) {
  if (walk.empty() || walk.front() != 0 || walk.back() != 2 * level) {
    throw std::invalid_argument("walk must run from 0 to 2T");
  }
  return BridgePath::from_positions(reflect_after_first_hit(walk, level));
}

Rational hitting_probability(std::uint64_t m, std::uint64_t level) {
  require_even(m);
  if (level > m / 2) return 0;
  const auto mm = static_cast<std::int64_t>(m);
  const auto t = static_cast<std::int64_t>(level);
  return Rational(binomial(mm, mm / 2 - t), binomial(mm, mm / 2));
}

}  // namespace ghom
