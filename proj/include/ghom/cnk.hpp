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

#ifndef GHOM_CNK_HPP_
#define GHOM_CNK_HPP_

#include <cstddef>
#include <set>
#include <span>
#include <vector>

#include "ghom/bignum.hpp"
#include "ghom/bridge.hpp"
#include "ghom/homomorphism.hpp"

namespace ghom {

// Homomorphisms of the layered cycle C_{n,k}: layers Z_n, each of k vertices,
// consecutive layers completely joined. Layer positions s are 0-based here, so
// the anchor (0,1) of the usual notation is (0,0), vertex 0 of layered_cycle().
//
//   H_{n,k}    homomorphisms with (0,0) -> 0
//   H0_{n,k}   the subset mapping the whole 0-layer to 0
//   NC(f)      layers on which f takes more than one value
//   RC(f)      the values f takes on its constant layers
//   V_k        {±1}^k minus the two constant vectors

/// A member of H_{n,k} stored as an n x k table (row i = layer i).
///
/// n = 0 is the empty layered homomorphism, the end point of peeling every
/// layer away; it reads as 0 everywhere.
class LayeredHom {
 public:
  LayeredHom() = default;  // n = 0: the empty layered map
  /// Throws std::invalid_argument unless n is even, values has n*k entries,
  /// consecutive layers (cyclically) differ by exactly one at every vertex
  /// pair, and values(0,0) = 0.
  static LayeredHom from_values(std::size_t n, std::size_t k, std::vector<Height> values);
  /// Reads a homomorphism of layered_cycle(n, k) (vertex i*k + s).
  static LayeredHom from_homomorphism(const Homomorphism& h, std::size_t n, std::size_t k);
  /// Constant layers following the bridge: layer i is S_i everywhere.
  static LayeredHom from_bridge(const BridgePath& bridge, std::size_t k);

  std::size_t layers() const { return n_; }
  std::size_t width() const { return k_; }
  std::span<const Height> values() const { return values_; }
  /// f(i mod n, s); 0 for the empty homomorphism.
  Height at(std::ptrdiff_t layer, std::size_t s) const;
  std::span<const Height> layer(std::size_t i) const;
  bool layer_constant(std::size_t i) const;
  /// Whole 0-layer mapped to 0 (membership in H0).
  bool zero_layer_flat() const;

  Homomorphism to_homomorphism(GraphPtr graph) const;

  friend bool operator==(const LayeredHom&, const LayeredHom&) = default;

 private:
  LayeredHom(std::size_t n, std::size_t k, std::vector<Height> values)
      : n_(n), k_(k), values_(std::move(values)) {}

  std::size_t n_ = 0;
  std::size_t k_ = 1;
  std::vector<Height> values_;
};

struct LayerProfile {
  /// NC(f), ascending.
  std::vector<std::size_t> non_constant;
  /// RC(f); {0} for the empty (n = 0) map, matching the bridge of length 0.
  std::set<Height> constant_values;
};

LayerProfile layer_profile(const LayeredHom& h);

/// Sign vector with entries ±1.
using SignVector = std::vector<int>;

// ---------------------------------------------------------------------------
// Non-constant 0-layer: H_{n,k} \ H0_{n,k}  <->  H0_{n-2,k} x {±1} x ({0,2}^{k-1} \ 0)

struct ZeroLayerReduction {
  LayeredHom reduced;  // f_down(i,s) = f(i+1,s) - f(1,0), in H0_{n-2,k}
  int z = 1;           // f(1,0)
  std::vector<int> w;  // w[s-1] = f(1,0) * f(0,s), s = 1..k-1; entries 0 or 2
};

/// Throws std::invalid_argument if n < 4 or the 0-layer of h is constant.
ZeroLayerReduction reduce_zero_layer(const LayeredHom& h);

/// Inverse of reduce_zero_layer:
///   f(0,0) = 0, f(0,s) = z w_s, f(n-1,.) = z, f(i,s) = g(i-1,s) + z for 1 <= i <= n-2.
/// Throws std::invalid_argument unless g is in H0 with at least 2 layers,
/// z = ±1 and w is a non-zero {0,2}-vector of length k-1.
LayeredHom rebuild_zero_layer(const LayeredHom& g, int z, std::span<const int> w);

// ---------------------------------------------------------------------------
// Layer peeling on H(I, n) = {f in H0 : NC(f) = I}

struct PeeledLayer {
  LayeredHom rest;  // in H(I \ {max I}, n - 2)
  SignVector shape; // f(i,s) - f(i-1,s) at i = max I
};

/// Removes the largest non-constant layer i and its follower i+1:
/// rest(j) = f(j) for j < i, f(j+2) for j >= i. Throws std::invalid_argument if
/// h is not in H0 or has no non-constant layer.
PeeledLayer peel(const LayeredHom& h);

/// Inserts a non-constant layer at index i (which becomes the largest
/// non-constant layer): g(j) = g'(j) for j < i, g'(i-1) + v at j = i, and
/// g'(j-2) for j > i, layers read cyclically. Throws std::invalid_argument if
/// g' is not in H0, i is not in [max(NC(g')) + 2, n'+1] (with i >= 1), or v is
/// not a non-constant sign vector of width k.
LayeredHom unpeel(const LayeredHom& rest, std::size_t index, std::span<const int> shape);

/// f in H(I, n) as (I, bridge in P(n - 2|I|), shapes in V_k^|I|).
/// shapes[j] belongs to indices[j].
struct LayerDecomposition {
  std::size_t n = 0;
  std::size_t k = 1;
  std::vector<std::size_t> indices;
  BridgePath bridge;
  std::vector<SignVector> shapes;

  friend bool operator==(const LayerDecomposition&, const LayerDecomposition&) = default;
};

/// Peels largest index first down to H(empty, n - 2l), then reads the bridge
/// off column 0. Rng(bridge) = RC(h). Throws std::invalid_argument unless h is
/// in H0.
LayerDecomposition decompose(const LayeredHom& h);

/// Inverse of decompose: equal to building the bridge's constant homomorphism
/// and unpeeling the indices in increasing order, done in one pass.
/// Throws std::invalid_argument for malformed decompositions.
LayeredHom recompose(const LayerDecomposition& d);

/// I subset of [1, n-1], strictly increasing, no two consecutive.
bool is_valid_layer_set(std::span<const std::size_t> indices, std::size_t n);

/// rho(I) = {i_j - (j-1)}: non-adjacent l-subsets of [1, n-1] to l-subsets of
/// [1, n-l]. Throws std::invalid_argument on an invalid I.
std::vector<std::size_t> rho(std::span<const std::size_t> indices, std::size_t n);
/// rho^{-1}(J) = {j_t + (t-1)}. Throws std::invalid_argument unless J is a
/// strictly increasing subset of [1, n - |J|].
std::vector<std::size_t> rho_inv(std::span<const std::size_t> subset, std::size_t n);

// ---------------------------------------------------------------------------
// Counting

/// Layer-count table of H0_{n,k} and the totals.
struct CnkCounts {
  std::size_t n = 0;
  std::size_t k = 1;
  /// h0[l] = |H0(l)| = C(n-l, l) C(n-2l, n/2-l) (2^k-2)^l, l = 0..n/2.
  std::vector<BigCount> h0;
  BigCount total_h0 = 0;
  /// |H0_{n,k}| + 2 (2^{k-1} - 1) |H0_{n-2,k}|, with |H0_{0,k}| = 1.
  BigCount total_h = 0;
};

/// Closed-form |H0(l)|; n may be 0.
BigCount h0_layer_count(std::size_t n, std::size_t k, std::size_t ell);

/// Throws std::invalid_argument unless n is even and >= 2 and k >= 1.
CnkCounts counts(std::size_t n, std::size_t k);

/// Number of f in H_{n,k} with |NC(f)| = l, l = 0..n/2: H0 contributes h0(l),
/// the non-constant-0-layer part contributes 2(2^{k-1}-1) h0_{n-2}(l-1).
std::vector<BigCount> nc_counts_all(std::size_t n, std::size_t k);

// ---------------------------------------------------------------------------
// Exact uniform samplers

/// Exactly uniform sampler for H0_{n,k} and H_{n,k}; tables are computed once.
///
/// sample_h0: l by exact inverse CDF over the h0 table, J uniform l-subset of
/// [1, n-l], I = rho^{-1}(J), a uniform bridge of length n-2l, l independent
/// uniform shapes from V_k, then recompose.
///
/// sample_h: with probability |H0_{n,k}|/|H_{n,k}| a sample_h0 draw; otherwise
/// rebuild_zero_layer(g, z, w) with g uniform in H0_{n-2,k}, z uniform ±1 and
/// w uniform in {0,2}^{k-1} \ 0.
class LayeredSampler {
 public:
  /// Throws std::invalid_argument unless n is even and >= 2 and k >= 1.
  LayeredSampler(std::size_t n, std::size_t k);

  const CnkCounts& counts() const { return counts_; }
  LayeredHom sample_h0(Rng& rng) const;
  /// Throws std::invalid_argument when n < 4.
  LayeredHom sample_h(Rng& rng) const;
  /// Draws only the number of non-constant layers of a uniform H0 element.
  std::size_t sample_layer_count(Rng& rng) const;

 private:
  struct Table {
    std::size_t n = 0;
    std::vector<BigCount> prefix;  // prefix[l] = h0(0) + ... + h0(l)
  };
  static Table make_table(std::size_t n, const std::vector<BigCount>& h0);
  LayeredHom draw_h0(const Table& t, Rng& rng) const;

  std::size_t n_;
  std::size_t k_;
  CnkCounts counts_;
  Table table_;
  Table smaller_;  // H0_{n-2,k}, used by sample_h
};

LayeredHom sample_h0(std::size_t n, std::size_t k, Rng& rng);
LayeredHom sample_h(std::size_t n, std::size_t k, Rng& rng);

/// Uniform element of V_k (k >= 2).
SignVector sample_shape(std::size_t k, Rng& rng);

}  // namespace ghom

#endif  // GHOM_CNK_HPP_
