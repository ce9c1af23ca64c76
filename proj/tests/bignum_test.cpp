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

#include <set>

#include "ghom/bignum.hpp"
#include "ghom/stats.hpp"

namespace ghom {
namespace {

TEST(BigCount, Binomial) {
  EXPECT_EQ(binomial(0, 0), 1);
  EXPECT_EQ(binomial(12, 6), 924);
  EXPECT_EQ(binomial(5, 7), 0);
  EXPECT_EQ(binomial(5, -1), 0);
  EXPECT_EQ(binomial(100, 50), BigCount("100891344545564193334812497256"));
  for (int n = 1; n < 40; ++n) {
    for (int k = 1; k < n; ++k) EXPECT_EQ(binomial(n, k), binomial(n - 1, k - 1) + binomial(n - 1, k));
  }
}

TEST(BigCount, Power) {
  EXPECT_EQ(power(0, 0), 1);
  EXPECT_EQ(power(0, 3), 0);
  EXPECT_EQ(power(2, 100), BigCount(1) << 100);
  EXPECT_EQ(power(1022, 2), 1044484);
}

TEST(Random, DerivedSeedsDiffer) {
  std::set<std::uint64_t> seen;
  for (std::uint64_t i = 0; i < 1000; ++i) seen.insert(derive_seed(0, i));
  EXPECT_EQ(seen.size(), 1000u);
  EXPECT_EQ(derive_seed(7, 3), derive_seed(7, 3));
}

TEST(Random, UniformBelowIsUniform) {
  Rng rng(5);
  std::vector<std::uint64_t> counts(6, 0);
  for (int i = 0; i < 60000; ++i) ++counts[uniform_below(std::uint64_t{6}, rng)];
  const std::vector<double> p(6, 1.0 / 6.0);
  EXPECT_GT(chi_square(counts, p).p_value, 1e-3);
  EXPECT_THROW(uniform_below(std::uint64_t{0}, rng), std::invalid_argument);
}

TEST(Random, BigUniformBelowIsUniform) {
  Rng rng(6);
  const BigCount bound = (BigCount(1) << 90) * 3;
  std::vector<std::uint64_t> counts(3, 0);
  for (int i = 0; i < 30000; ++i) {
    const BigCount x = uniform_below(bound, rng);
    ASSERT_GE(x, 0);
    ASSERT_LT(x, bound);
    ++counts[static_cast<std::size_t>((x >> 90).convert_to<std::uint64_t>())];
  }
  EXPECT_GT(chi_square(counts, std::vector<double>(3, 1.0 / 3.0)).p_value, 1e-3);
  EXPECT_THROW(uniform_below(BigCount(0), rng), std::invalid_argument);
}

TEST(Random, Bernoulli) {
  Rng rng(7);
  int hits = 0;
  for (int i = 0; i < 30000; ++i) hits += bernoulli(1, 3, rng) ? 1 : 0;
  const std::uint64_t obs[] = {static_cast<std::uint64_t>(hits),
                               static_cast<std::uint64_t>(30000 - hits)};
  const double p[] = {1.0 / 3.0, 2.0 / 3.0};
  EXPECT_GT(chi_square(obs, p).p_value, 1e-3);
  EXPECT_FALSE(bernoulli(0, 5, rng));
  EXPECT_TRUE(bernoulli(5, 5, rng));
}

TEST(Rational, ExactConversion) {
  EXPECT_EQ(exact_rational(0.5), Rational(1) / 2);
  EXPECT_EQ(exact_rational(0.03125), Rational(1) / 32);
  EXPECT_NE(exact_rational(0.1), Rational(1) / 10);  // 0.1 is not a binary fraction
  EXPECT_DOUBLE_EQ(to_double(Rational(2) / 3), 2.0 / 3.0);
  EXPECT_EQ(to_string(Rational(4) / 6), "2/3");
}

}  // namespace
}  // namespace ghom
