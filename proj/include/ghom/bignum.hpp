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

#ifndef GHOM_BIGNUM_HPP_
#define GHOM_BIGNUM_HPP_

#include <cstdint>
#include <random>
#include <string>

#include <boost/multiprecision/gmp.hpp>

namespace ghom {

/// Arbitrary-precision natural number used for every homomorphism and path count.
using BigCount = boost::multiprecision::mpz_int;
/// Exact probabilities.
using Rational = boost::multiprecision::mpq_rational;

/// The randomness source. Its output sequence is fixed by the standard, so a
/// seed reproduces the same draws on every platform.
using Rng = std::mt19937_64;

/// Derives an independent stream seed for sub-task `index` of a run seeded
/// with `seed` (splitmix64 finalizer).
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index);

/// Binomial coefficient C(n, k); zero when k < 0 or k > n.
BigCount binomial(std::int64_t n, std::int64_t k);

/// base^exp with 0^0 = 1.
BigCount power(const BigCount& base, std::uint64_t exp);

/// Uniform integer in [0, bound). Mask-and-reject, so every value has
/// probability exactly 1/bound. Throws std::invalid_argument if bound == 0.
std::uint64_t uniform_below(std::uint64_t bound, Rng& rng);
BigCount uniform_below(const BigCount& bound, Rng& rng);

/// True with probability exactly num/den (0 <= num <= den, den > 0).
bool bernoulli(const BigCount& num, const BigCount& den, Rng& rng);

/// Exact rational value of a finite double.
Rational exact_rational(double x);

double to_double(const Rational& q);
std::string to_string(const BigCount& x);
std::string to_string(const Rational& q);

}  // namespace ghom

#endif  // GHOM_BIGNUM_HPP_
