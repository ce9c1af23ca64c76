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

#include "ghom/bignum.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>

namespace ghom {

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

BigCount binomial(std::int64_t n, std::int64_t k) {
  if (n < 0 || k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  BigCount result = 1;
  // result stays equal to C(n-k+i, i) after step i, so each division is exact.
  for (std::int64_t i = 1; i <= k; ++i) {
    result *= n - k + i;
    result /= i;
  }
  return result;
}

BigCount power(const BigCount& base, std::uint64_t exp) {
  BigCount result = 1;
  BigCount b = base;
  while (exp > 0) {
    if (exp & 1) result *= b;
    exp >>= 1;
    if (exp > 0) b *= b;
  }
  return result;
}

std::uint64_t uniform_below(std::uint64_t bound, Rng& rng) {
  if (bound == 0) throw std::invalid_argument("uniform_below: empty range");
  if (bound == 1) return 0;
  const std::uint64_t top = bound - 1;
  const std::uint64_t mask =
      top == 0 ? 0 : (~std::uint64_t{0} >> std::countl_zero(top));
  for (;;) {
    const std::uint64_t x = rng() & mask;
    if (x < bound) return x;
  }
}

BigCount uniform_below(const BigCount& bound, Rng& rng) {
  if (bound <= 0) throw std::invalid_argument("uniform_below: empty range");
  if (bound == 1) return 0;
  const BigCount top = bound - 1;
  const std::size_t bits = boost::multiprecision::msb(top) + 1;
  const std::size_t words = (bits + 63) / 64;
  const std::size_t spare = words * 64 - bits;
  for (;;) {
    BigCount x = 0;
    for (std::size_t w = 0; w < words; ++w) {
      std::uint64_t word = rng();
      if (w == 0 && spare > 0) word >>= spare;
      x <<= 64;
      x += word;
    }
    if (x < bound) return x;
  }
}

bool bernoulli(const BigCount& num, const BigCount& den, Rng& rng) {
  if (den <= 0 || num < 0 || num > den) {
    throw std::invalid_argument("bernoulli: need 0 <= num <= den, den > 0");
  }
  return uniform_below(den, rng) < num;
}

Rational exact_rational(double x) {
  if (!std::isfinite(x)) throw std::invalid_argument("exact_rational: non-finite");
  return Rational(x);
}

double to_double(const Rational& q) { return q.convert_to<double>(); }

std::string to_string(const BigCount& x) { return x.str(); }

std::string to_string(const Rational& q) { return q.str(); }

}  // namespace ghom
