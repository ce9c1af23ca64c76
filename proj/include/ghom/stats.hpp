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

#ifndef GHOM_STATS_HPP_
#define GHOM_STATS_HPP_

#include <cstdint>
#include <map>
#include <span>
#include <vector>

namespace ghom {

struct ChiSquareResult {
  double statistic = 0.0;
  std::size_t dof = 0;
  double p_value = 1.0;
};

/// Upper tail Pr[X >= x] of a chi-square variable with `dof` degrees of
/// freedom (regularized upper incomplete gamma Q(dof/2, x/2)).
double chi_square_survival(double x, std::size_t dof);

/// Pearson goodness of fit of `observed` counts against exact cell
/// probabilities; dof = cells - 1. Throws std::invalid_argument if the sizes
/// differ, a probability is not positive, the probabilities do not sum to 1,
/// or there are fewer than two cells.
ChiSquareResult chi_square(std::span<const std::uint64_t> observed,
                           std::span<const double> expected);

/// Keyed form. Keys observed but absent from `expected` are a support mismatch
/// (std::invalid_argument); expected keys never observed count as zero.
ChiSquareResult chi_square(const std::map<std::int64_t, std::uint64_t>& observed,
                           const std::map<std::int64_t, double>& expected);

/// Two-sample homogeneity test on histograms over ordered keys. Adjacent keys
/// are pooled until each pooled cell holds at least `min_cell` observations in
/// total, then the 2 x c contingency statistic is taken with dof = c - 1.
ChiSquareResult two_sample_chi_square(const std::map<std::int64_t, std::uint64_t>& a,
                                      const std::map<std::int64_t, std::uint64_t>& b,
                                      std::uint64_t min_cell = 10);

/// sqrt(p (1 - p) / n).
double binomial_standard_error(double p, std::uint64_t n);

/// Sample mean and its standard error.
struct MeanEstimate {
  double mean = 0.0;
  double std_error = 0.0;
};
MeanEstimate mean_estimate(std::span<const double> xs);

/// Lower empirical quantile: the smallest x with at least q of the sample <= x.
double empirical_quantile(std::vector<double> xs, double q);

}  // namespace ghom

#endif  // GHOM_STATS_HPP_
