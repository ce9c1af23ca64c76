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

#include "ghom/cnk.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace ghom {
namespace {

void require(bool ok, const char* what) {
  if (!ok) throw std::invalid_argument(what);
}

// Distinct values of a layer, at most three recorded (three already fails).
struct LayerValues {
  Height v[3] = {0, 0, 0};
  int count = 0;
};

LayerValues distinct(std::span<const Height> layer) {
  LayerValues out;
  for (Height x : layer) {
    bool found = false;
    for (int j = 0; j < out.count; ++j) found = found || out.v[j] == x;
    if (!found) {
      out.v[out.count++] = x;
      if (out.count == 3) break;
    }
  }
  return out;
}

bool layers_compatible(const LayerValues& a, const LayerValues& b) {
  if (a.count > 2 || b.count > 2) return false;
  for (int i = 0; i < a.count; ++i) {
    for (int j = 0; j < b.count; ++j) {
      const Height d = a.v[i] - b.v[j];
      if (d != 1 && d != -1) return false;
    }
  }
  return true;
}

bool is_shape(std::span<const int> v, std::size_t k) {
  if (v.size() != k || k < 2) return false;
  bool plus = false, minus = false;
  for (int x : v) {
    if (x == 1) {
      plus = true;
    } else if (x == -1) {
      minus = true;
    } else {
      return false;
    }
  }
  return plus && minus;
}

}  // namespace

LayeredHom LayeredHom::from_values(std::size_t n, std::size_t k, std::vector<Height> values) {
  require(k >= 1, "layer width must be >= 1");
  require(n % 2 == 0, "number of layers must be even");
  require(values.size() == n * k, "value table has the wrong size");
  if (n > 0) {
    require(values[0] == 0, "anchor (0,0) must map to 0");
    std::vector<LayerValues> layers(n);
    for (std::size_t i = 0; i < n; ++i) {
      layers[i] = distinct(std::span<const Height>(values).subspan(i * k, k));
    }
    for (std::size_t i = 0; i < n; ++i) {
      require(layers_compatible(layers[i], layers[(i + 1) % n]),
              "adjacent layers must differ by exactly one");
    }
  }
  return LayeredHom(n, k, std::move(values));
}

LayeredHom LayeredHom::from_homomorphism(const Homomorphism& h, std::size_t n,
                                         std::size_t k) {
  require(h.size() == n * k, "homomorphism does not match C_{n,k}");
  return from_values(n, k, std::vector<Height>(h.values().begin(), h.values().end()));
}

LayeredHom LayeredHom::from_bridge(const BridgePath& bridge, std::size_t k) {
  const std::size_t n = bridge.length();
  std::vector<Height> values(n * k);
  for (std::size_t i = 0; i < n; ++i) {
    std::fill_n(values.begin() + i * k, k, bridge.positions()[i]);
  }
  return from_values(n, k, std::move(values));
}

Height LayeredHom::at(std::ptrdiff_t layer, std::size_t s) const {
  if (n_ == 0) return 0;
  const auto n = static_cast<std::ptrdiff_t>(n_);
  const auto i = static_cast<std::size_t>(((layer % n) + n) % n);
  return values_[i * k_ + s];
}

std::span<const Height> LayeredHom::layer(std::size_t i) const {
  return std::span<const Height>(values_).subspan(i * k_, k_);
}

bool LayeredHom::layer_constant(std::size_t i) const {
  const auto l = layer(i);
  return std::all_of(l.begin(), l.end(), [&](Height x) { return x == l[0]; });
}

bool LayeredHom::zero_layer_flat() const {
  if (n_ == 0) return true;
  const auto l = layer(0);
  return std::all_of(l.begin(), l.end(), [](Height x) { return x == 0; });
}

Homomorphism LayeredHom::to_homomorphism(GraphPtr graph) const {
  return Homomorphism::anchored(std::move(graph), values_);
}

LayerProfile layer_profile(const LayeredHom& h) {
  LayerProfile p;
  // The empty map stands for the length-0 bridge, which sits at 0.
  if (h.layers() == 0) p.constant_values.insert(0);
  for (std::size_t i = 0; i < h.layers(); ++i) {
    if (h.layer_constant(i)) {
      p.constant_values.insert(h.at(static_cast<std::ptrdiff_t>(i), 0));
    } else {
      p.non_constant.push_back(i);
    }
  }
  return p;
}

ZeroLayerReduction reduce_zero_layer(const LayeredHom& h) {
  const std::size_t n = h.layers(), k = h.width();
  require(n >= 4, "zero-layer reduction needs n >= 4");
  require(!h.layer_constant(0), "zero layer is constant");
  ZeroLayerReduction out;
  const Height shift = h.at(1, 0);
  std::vector<Height> down((n - 2) * k);
  for (std::size_t i = 0; i + 2 < n; ++i) {
    for (std::size_t s = 0; s < k; ++s) {
      down[i * k + s] = h.at(static_cast<std::ptrdiff_t>(i + 1), s) - shift;
    }
  }
  out.reduced = LayeredHom::from_values(n - 2, k, std::move(down));
  out.z = static_cast<int>(shift);
  for (std::size_t s = 1; s < k; ++s) out.w.push_back(static_cast<int>(shift * h.at(0, s)));
  return out;
}

LayeredHom rebuild_zero_layer(const LayeredHom& g, int z, std::span<const int> w) {
  const std::size_t k = g.width();
  require(g.layers() >= 2, "rebuild needs a reduced homomorphism with >= 2 layers");
  require(g.zero_layer_flat(), "reduced homomorphism must lie in H0");
  require(z == 1 || z == -1, "z must be +-1");
  require(w.size() + 1 == k, "w must have length k-1");
  require(std::all_of(w.begin(), w.end(), [](int x) { return x == 0 || x == 2; }),
          "w entries must be 0 or 2");
  require(std::any_of(w.begin(), w.end(), [](int x) { return x != 0; }),
          "w must be non-zero");
  const std::size_t n = g.layers() + 2;
  std::vector<Height> f(n * k);
  f[0] = 0;
  for (std::size_t s = 1; s < k; ++s) f[s] = z * w[s - 1];
  for (std::size_t i = 1; i + 1 < n; ++i) {
    for (std::size_t s = 0; s < k; ++s) {
      f[i * k + s] = g.at(static_cast<std::ptrdiff_t>(i - 1), s) + z;
    }
  }
  std::fill_n(f.begin() + (n - 1) * k, k, Height{z});
  return LayeredHom::from_values(n, k, std::move(f));
}

PeeledLayer peel(const LayeredHom& h) {
  require(h.zero_layer_flat(), "peel needs an element of H0");
  const auto profile = layer_profile(h);
  require(!profile.non_constant.empty(), "no non-constant layer to peel");
  const std::size_t n = h.layers(), k = h.width();
  const std::size_t top = profile.non_constant.back();
  const auto top_i = static_cast<std::ptrdiff_t>(top);

  PeeledLayer out;
  for (std::size_t s = 0; s < k; ++s) {
    out.shape.push_back(static_cast<int>(h.at(top_i, s) - h.at(top_i - 1, s)));
  }
  std::vector<Height> rest((n - 2) * k);
  for (std::size_t i = 0; i + 2 < n; ++i) {
    const std::size_t from = i < top ? i : i + 2;
    for (std::size_t s = 0; s < k; ++s) {
      rest[i * k + s] = h.at(static_cast<std::ptrdiff_t>(from), s);
    }
  }
  out.rest = LayeredHom::from_values(n - 2, k, std::move(rest));
  return out;
}

LayeredHom unpeel(const LayeredHom& rest, std::size_t index, std::span<const int> shape) {
  const std::size_t k = rest.width();
  require(rest.zero_layer_flat(), "unpeel needs an element of H0");
  require(is_shape(shape, k), "shape must be a non-constant sign vector of width k");
  const std::size_t n_rest = rest.layers();
  const auto profile = layer_profile(rest);
  const std::size_t lowest = profile.non_constant.empty() ? 1 : profile.non_constant.back() + 2;
  require(index >= lowest && index <= n_rest + 1,
          "insertion index must exceed the existing non-constant layers by 2");
  const std::size_t n = n_rest + 2;
  const auto idx = static_cast<std::ptrdiff_t>(index);
  std::vector<Height> g(n * k);
  for (std::size_t j = 0; j < n; ++j) {
    const auto jj = static_cast<std::ptrdiff_t>(j);
    for (std::size_t s = 0; s < k; ++s) {
      Height value;
      if (jj < idx) {
        value = rest.at(jj, s);
      } else if (jj == idx) {
        value = rest.at(jj - 1, s) + shape[s];
      } else {
        value = rest.at(jj - 2, s);
      }
      g[j * k + s] = value;
    }
  }
  return LayeredHom::from_values(n, k, std::move(g));
}

LayerDecomposition decompose(const LayeredHom& h) {
  require(h.zero_layer_flat(), "decompose needs an element of H0");
  LayerDecomposition d;
  d.n = h.layers();
  d.k = h.width();
  d.indices = layer_profile(h).non_constant;
  LayeredHom current = h;
  for (std::size_t j = 0; j < d.indices.size(); ++j) {
    PeeledLayer p = peel(current);
    d.shapes.push_back(std::move(p.shape));
    current = std::move(p.rest);
  }
  std::reverse(d.shapes.begin(), d.shapes.end());
  std::vector<Height> positions;
  for (std::size_t i = 0; i <= current.layers(); ++i) {
    positions.push_back(current.at(static_cast<std::ptrdiff_t>(i), 0));
  }
  d.bridge = BridgePath::from_positions(std::move(positions));
  return d;
}

LayeredHom recompose(const LayerDecomposition& d) {
  const std::size_t n = d.n, k = d.k, ell = d.indices.size();
  require(n % 2 == 0, "number of layers must be even");
  require(is_valid_layer_set(d.indices, n), "invalid non-constant layer set");
  require(2 * ell <= n && d.bridge.length() == n - 2 * ell,
          "bridge length must be n - 2l");
  require(d.shapes.size() == ell, "one shape per non-constant layer");
  for (const auto& v : d.shapes) require(is_shape(v, k), "shape must be non-constant +-1");

  // Layers not in I and not right after a member of I take successive bridge
  // positions; a member of I is its predecessor plus its shape; the layer after
  // it repeats the predecessor.
  const auto bridge = d.bridge.positions();
  std::vector<Height> g(n * k);
  std::size_t next_bridge = 0, next_index = 0;
  bool after_nc = false;
  Height last_constant = 0;
  for (std::size_t i = 0; i < n; ++i) {
    auto row = g.begin() + static_cast<std::ptrdiff_t>(i * k);
    if (next_index < ell && d.indices[next_index] == i) {
      const auto& v = d.shapes[next_index++];
      for (std::size_t s = 0; s < k; ++s) row[s] = last_constant + v[s];
      after_nc = true;
      continue;
    }
    if (!after_nc) last_constant = bridge[next_bridge++];
    std::fill_n(row, k, last_constant);
    after_nc = false;
  }
  return LayeredHom::from_values(n, k, std::move(g));
}

bool is_valid_layer_set(std::span<const std::size_t> indices, std::size_t n) {
  for (std::size_t j = 0; j < indices.size(); ++j) {
    if (indices[j] < 1 || indices[j] + 1 > n) return false;
    if (j > 0 && indices[j] < indices[j - 1] + 2) return false;
  }
  return true;
}

std::vector<std::size_t> rho(std::span<const std::size_t> indices, std::size_t n) {
  require(is_valid_layer_set(indices, n), "rho: invalid layer set");
  std::vector<std::size_t> out;
  for (std::size_t j = 0; j < indices.size(); ++j) out.push_back(indices[j] - j);
  return out;
}

std::vector<std::size_t> rho_inv(std::span<const std::size_t> subset, std::size_t n) {
  const std::size_t ell = subset.size();
  require(ell <= n, "rho_inv: subset too large");
  for (std::size_t t = 0; t < ell; ++t) {
    require(subset[t] >= 1 && subset[t] <= n - ell, "rho_inv: element outside [1, n-l]");
    require(t == 0 || subset[t] > subset[t - 1], "rho_inv: subset must be increasing");
  }
  std::vector<std::size_t> out;
  for (std::size_t t = 0; t < ell; ++t) out.push_back(subset[t] + t);
  return out;
}

BigCount h0_layer_count(std::size_t n, std::size_t k, std::size_t ell) {
  if (n % 2 != 0 || 2 * ell > n) return 0;
  const auto nn = static_cast<std::int64_t>(n);
  const auto l = static_cast<std::int64_t>(ell);
  const BigCount shapes = (BigCount(1) << k) - 2;
  return binomial(nn - l, l) * binomial(nn - 2 * l, nn / 2 - l) * power(shapes, ell);
}

namespace {

std::vector<BigCount> h0_table(std::size_t n, std::size_t k) {
  std::vector<BigCount> out;
  for (std::size_t ell = 0; 2 * ell <= n; ++ell) out.push_back(h0_layer_count(n, k, ell));
  return out;
}

BigCount sum(const std::vector<BigCount>& xs) {
  BigCount total = 0;
  for (const auto& x : xs) total += x;
  return total;
}

// 2 (2^{k-1} - 1): the (z, w) choices for a non-constant 0-layer.
BigCount zero_layer_choices(std::size_t k) {
  return 2 * ((BigCount(1) << (k - 1)) - 1);
}

void require_cnk_params(std::size_t n, std::size_t k) {
  require(n >= 2 && n % 2 == 0, "n must be even and >= 2");
  require(k >= 1, "k must be >= 1");
}

}  // namespace

CnkCounts counts(std::size_t n, std::size_t k) {
  require_cnk_params(n, k);
  CnkCounts c;
  c.n = n;
  c.k = k;
  c.h0 = h0_table(n, k);
  c.total_h0 = sum(c.h0);
  c.total_h = c.total_h0 + zero_layer_choices(k) * sum(h0_table(n - 2, k));
  return c;
}

std::vector<BigCount> nc_counts_all(std::size_t n, std::size_t k) {
  require_cnk_params(n, k);
  auto out = h0_table(n, k);
  const auto smaller = h0_table(n - 2, k);
  const BigCount factor = zero_layer_choices(k);
  for (std::size_t ell = 0; ell < smaller.size(); ++ell) out[ell + 1] += factor * smaller[ell];
  return out;
}

LayeredSampler::Table LayeredSampler::make_table(std::size_t n,
                                                 const std::vector<BigCount>& h0) {
  Table t;
  t.n = n;
  BigCount running = 0;
  for (const auto& x : h0) {
    running += x;
    t.prefix.push_back(running);
  }
  return t;
}

LayeredSampler::LayeredSampler(std::size_t n, std::size_t k)
    : n_(n), k_(k), counts_(ghom::counts(n, k)) {
  table_ = make_table(n, counts_.h0);
  smaller_ = make_table(n - 2, h0_table(n - 2, k));
}

namespace {

std::size_t draw_layer_count(const std::vector<BigCount>& prefix, Rng& rng) {
  const BigCount u = uniform_below(prefix.back(), rng);
  return static_cast<std::size_t>(
      std::upper_bound(prefix.begin(), prefix.end(), u) - prefix.begin());
}

// Floyd's algorithm: uniform size-m subset of [1, N], sorted.
std::vector<std::size_t> random_subset(std::size_t universe, std::size_t m, Rng& rng) {
  std::set<std::size_t> chosen;
  for (std::size_t j = universe - m + 1; j <= universe; ++j) {
    const std::size_t t = 1 + uniform_below(j, rng);
    if (!chosen.insert(t).second) chosen.insert(j);
  }
  return {chosen.begin(), chosen.end()};
}

}  // namespace

std::size_t LayeredSampler::sample_layer_count(Rng& rng) const {
  return draw_layer_count(table_.prefix, rng);
}

LayeredHom LayeredSampler::draw_h0(const Table& t, Rng& rng) const {
  LayerDecomposition d;
  d.n = t.n;
  d.k = k_;
  const std::size_t ell = draw_layer_count(t.prefix, rng);
  d.indices = rho_inv(random_subset(t.n - ell, ell, rng), t.n);
  d.bridge = sample_bridge(t.n - 2 * ell, rng);
  for (std::size_t j = 0; j < ell; ++j) d.shapes.push_back(sample_shape(k_, rng));
  return recompose(d);
}

LayeredHom LayeredSampler::sample_h0(Rng& rng) const { return draw_h0(table_, rng); }

LayeredHom LayeredSampler::sample_h(Rng& rng) const {
  require(n_ >= 4, "sample_h needs n >= 4");
  // k = 1: the 0-layer is a single vertex, so H = H0.
  if (k_ == 1) return sample_h0(rng);
  if (bernoulli(counts_.total_h0, counts_.total_h, rng)) return sample_h0(rng);
  const LayeredHom g = draw_h0(smaller_, rng);
  const int z = uniform_below(std::uint64_t{2}, rng) == 0 ? -1 : 1;
  std::vector<int> w(k_ - 1);
  for (;;) {
    bool nonzero = false;
    for (auto& x : w) {
      x = static_cast<int>(2 * uniform_below(std::uint64_t{2}, rng));
      nonzero = nonzero || x != 0;
    }
    if (nonzero) break;
  }
  return rebuild_zero_layer(g, z, w);
}

LayeredHom sample_h0(std::size_t n, std::size_t k, Rng& rng) {
  return LayeredSampler(n, k).sample_h0(rng);
}

LayeredHom sample_h(std::size_t n, std::size_t k, Rng& rng) {
  return LayeredSampler(n, k).sample_h(rng);
}

SignVector sample_shape(std::size_t k, Rng& rng) {
  require(k >= 2, "V_k is empty for k < 2");
  SignVector v(k);
  for (;;) {
    for (std::size_t s = 0; s < k; s += 64) {
      std::uint64_t bits = rng();
      for (std::size_t b = s; b < std::min(k, s + 64); ++b, bits >>= 1) {
        v[b] = (bits & 1) ? 1 : -1;
      }
    }
    if (is_shape(v, k)) return v;
  }
}

}  // namespace ghom
