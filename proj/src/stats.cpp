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

#include "ghom/stats.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include <boost/math/special_functions/gamma.hpp>

namespace ghom {

double chi_square_survival(double x, std::size_t dof) {
  if (dof == 0) throw std::invalid_argument("chi-square needs dof >= 1");
  if (x <= 0.0) return 1.0;
  return boost::math::gamma_q(static_cast<double>(dof) / 2.0, x / 2.0);
}

ChiSquareResult chi_square(std::span<const std::uint64_t> observed,
                           std::span<const double> expected) {
  if (observed.size() != expected.size()) {
    throw std::invalid_argument("chi_square: support mismatch");
  }
  if (observed.size() < 2) throw std::invalid_argument("chi_square: need >= 2 cells");
  double mass = 0.0;
  for (double p : expected) {
    if (!(p > 0.0)) throw std::invalid_argument("chi_square: expected mass must be positive");
    mass += p;
  }
  if (std::abs(mass - 1.0) > 1e-9) {
    throw std::invalid_argument("chi_square: expected masses must sum to 1");
  }
  const double total =
      static_cast<double>(std::accumulate(observed.begin(), observed.end(), std::uint64_t{0}));
  ChiSquareResult r;
  for (std::size_t i = 0; i < observed.size(); ++i) {
    const double e = expected[i] * total;
    const double d = static_cast<double>(observed[i]) - e;
    r.statistic += d * d / e;
  }
  r.dof = observed.size() - 1;
  r.p_value = chi_square_survival(r.statistic, r.dof);
  return r;
}

ChiSquareResult chi_square(const std::map<std::int64_t, std::uint64_t>& observed,
                           const std::map<std::int64_t, double>& expected) {
  for (const auto& [key, count] : observed) {
    if (count > 0 && !expected.contains(key)) {
      throw std::invalid_argument("chi_square: observed outcome outside the support");
    }
  }
  std::vector<std::uint64_t> obs;
  std::vector<double> exp;
  for (const auto& [key, p] : expected) {
    const auto it = observed.find(key);
    obs.push_back(it == observed.end() ? 0 : it->second);
    exp.push_back(p);
  }
  return chi_square(obs, exp);
}

ChiSquareResult two_sample_chi_square(const std::map<std::int64_t, std::uint64_t>& a,
                                      const std::map<std::int64_t, std::uint64_t>& b,
                                      std::uint64_t min_cell) {
  std::map<std::int64_t, std::pair<std::uint64_t, std::uint64_t>> joint;
  for (const auto& [key, c] : a) joint[key].first += c;
  for (const auto& [key, c] : b) joint[key].second += c;

  std::vector<std::pair<double, double>> cells;
  std::pair<double, double> pending{0.0, 0.0};
  for (const auto& [key, c] : joint) {
    pending.first += static_cast<double>(c.first);
    pending.second += static_cast<double>(c.second);
    if (pending.first + pending.second >= static_cast<double>(min_cell)) {
      cells.push_back(pending);
      pending = {0.0, 0.0};
    }
  }
  if (pending.first + pending.second > 0.0) {
    if (cells.empty()) {
      cells.push_back(pending);
    } else {
      cells.back().first += pending.first;
      cells.back().second += pending.second;
    }
  }
  if (cells.size() < 2) throw std::invalid_argument("two_sample_chi_square: need >= 2 cells");

  double na = 0.0, nb = 0.0;
  for (auto [x, y] : cells) {
    na += x;
    nb += y;
  }
  if (na == 0.0 || nb == 0.0) throw std::invalid_argument("two_sample_chi_square: empty sample");
  const double n = na + nb;
  ChiSquareResult r;
  for (auto [x, y] : cells) {
    const double col = x + y;
    const double ea = na * col / n, eb = nb * col / n;
    r.statistic += (x - ea) * (x - ea) / ea + (y - eb) * (y - eb) / eb;
  }
  r.dof = cells.size() - 1;
  r.p_value = chi_square_survival(r.statistic, r.dof);
  return r;
}

double binomial_standard_error(double p, std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("standard error of an empty sample");
  return std::sqrt(std::max(0.0, p * (1.0 - p)) / static_cast<double>(n));
}

MeanEstimate mean_estimate(std::span<const double> xs) {
  if (xs.empty()) throw std::invalid_argument("mean of an empty sample");
  MeanEstimate m;
  const double n = static_cast<double>(xs.size());
  m.mean = std::accumulate(xs.begin(), xs.end(), 0.0) / n;
  if (xs.size() > 1) {
    double ss = 0.0;
    for (double x : xs) ss += (x - m.mean) * (x - m.mean);
    m.std_error = std::sqrt(ss / (n - 1.0) / n);
  }
  return m;
}

double empirical_quantile(std::vector<double> xs, double q) {
  if (xs.empty()) throw std::invalid_argument("quantile of an empty sample");
  if (q < 0.0 || q > 1.0) throw std::invalid_argument("quantile level outside [0,1]");
  std::sort(xs.begin(), xs.end());
  auto idx = static_cast<std::size_t>(std::ceil(q * static_cast<double>(xs.size())));
  if (idx > 0) --idx;
  return xs[std::min(idx, xs.size() - 1)];
}

}  // namespace ghom
