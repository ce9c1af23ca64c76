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

#include <gtest/gtest.h>

#include <cmath>

#include "ghom/stats.hpp"

namespace ghom {
namespace {

TEST(ChiSquare, ExactFitIsZero) {
  const std::vector<std::uint64_t> obs(6, 1000);
  const auto r = chi_square(obs, std::vector<double>(6, 1.0 / 6.0));
  EXPECT_NEAR(r.statistic, 0.0, 1e-9);
  EXPECT_EQ(r.dof, 5u);
  EXPECT_NEAR(r.p_value, 1.0, 1e-12);

  const std::uint64_t skew[] = {250, 750};
  const double p[] = {0.25, 0.75};
  EXPECT_NEAR(chi_square(skew, p).statistic, 0.0, 1e-12);
}

TEST(ChiSquare, WorkedExample) {
  const std::uint64_t obs[] = {60, 40};
  const double p[] = {0.5, 0.5};
  const auto r = chi_square(obs, p);
  EXPECT_DOUBLE_EQ(r.statistic, 4.0);
  EXPECT_EQ(r.dof, 1u);
  EXPECT_NEAR(r.p_value, 0.0455002638963584, 1e-12);
}

TEST(ChiSquare, Survival) {
  EXPECT_NEAR(chi_square_survival(3.841458820694124, 1), 0.05, 1e-12);
  EXPECT_NEAR(chi_square_survival(2.0, 2), std::exp(-1.0), 1e-14);
  EXPECT_DOUBLE_EQ(chi_square_survival(0.0, 4), 1.0);
  EXPECT_THROW(chi_square_survival(1.0, 0), std::invalid_argument);
}

TEST(ChiSquare, Errors) {
  const std::uint64_t two[] = {1, 2};
  const double three[] = {0.2, 0.3, 0.5};
  EXPECT_THROW(chi_square(two, three), std::invalid_argument);
  const double zero[] = {0.0, 1.0};
  EXPECT_THROW(chi_square(two, zero), std::invalid_argument);
  const double short_mass[] = {0.3, 0.3};
  EXPECT_THROW(chi_square(two, short_mass), std::invalid_argument);

  const std::map<std::int64_t, std::uint64_t> obs{{1, 5}, {7, 3}};
  const std::map<std::int64_t, double> exp{{1, 0.5}, {2, 0.5}};
  EXPECT_THROW(chi_square(obs, exp), std::invalid_argument);
}

TEST(ChiSquare, KeyedFormCountsMissingCellsAsZero) {
  const std::map<std::int64_t, std::uint64_t> obs{{1, 60}};
  const std::map<std::int64_t, double> exp{{1, 0.6}, {2, 0.4}};
  EXPECT_NEAR(chi_square(obs, exp).statistic, 16.0 + 24.0, 1e-9);
}

TEST(TwoSample, IdenticalHistograms) {
  const std::map<std::int64_t, std::uint64_t> a{{1, 100}, {2, 200}, {3, 50}};
  const auto r = two_sample_chi_square(a, a);
  EXPECT_NEAR(r.statistic, 0.0, 1e-12);
  EXPECT_EQ(r.dof, 2u);
}

TEST(TwoSample, DetectsShift) {
  const std::map<std::int64_t, std::uint64_t> a{{1, 500}, {2, 500}};
  const std::map<std::int64_t, std::uint64_t> b{{1, 400}, {2, 600}};
  const auto r = two_sample_chi_square(a, b);
  // 2x2 table: statistic = N (ad - bc)^2 / (row and column products)
  const double expect = 2000.0 * std::pow(500.0 * 600 - 500.0 * 400, 2) /
                        (1000.0 * 1000.0 * 900.0 * 1100.0);
  EXPECT_NEAR(r.statistic, expect, 1e-9);
  EXPECT_LT(r.p_value, 1e-4);
}

TEST(TwoSample, PoolsSparseCells) {
  const std::map<std::int64_t, std::uint64_t> a{{1, 100}, {2, 1}, {3, 100}, {9, 2}};
  const std::map<std::int64_t, std::uint64_t> b{{1, 100}, {3, 100}, {8, 1}};
  const auto r = two_sample_chi_square(a, b, 10);
  EXPECT_EQ(r.dof, 1u);
}

TEST(Estimates, BinomialAndMean) {
  EXPECT_DOUBLE_EQ(binomial_standard_error(0.5, 100), 0.05);
  EXPECT_DOUBLE_EQ(binomial_standard_error(0.0, 100), 0.0);
  EXPECT_THROW(binomial_standard_error(0.5, 0), std::invalid_argument);
  const double xs[] = {1, 2, 3, 4};
  const auto m = mean_estimate(xs);
  EXPECT_DOUBLE_EQ(m.mean, 2.5);
  EXPECT_NEAR(m.std_error, std::sqrt(5.0 / 3.0 / 4.0), 1e-12);
  EXPECT_DOUBLE_EQ(empirical_quantile({5, 1, 3, 2, 4}, 0.5), 3.0);
  EXPECT_DOUBLE_EQ(empirical_quantile({5, 1, 3, 2, 4}, 0.0), 1.0);
  EXPECT_DOUBLE_EQ(empirical_quantile({5, 1, 3, 2, 4}, 1.0), 5.0);
}

}  // namespace
}  // namespace ghom
