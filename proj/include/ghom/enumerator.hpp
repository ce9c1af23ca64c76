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

#ifndef GHOM_ENUMERATOR_HPP_
#define GHOM_ENUMERATOR_HPP_

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "ghom/bignum.hpp"
#include "ghom/homomorphism.hpp"

namespace ghom {

/// Exhaustive description of Hom_{anchor}(G, Z).
struct EnumerationResult {
  BigCount count = 0;
  /// Present only when count <= the materialization cap.
  std::optional<std::vector<Homomorphism>> items;
  /// range size -> number of homomorphisms with that range.
  std::map<std::size_t, BigCount> range_histogram;
};

/// Called with the full value vector of each homomorphism in enumeration
/// order. Return false to stop.
using HomVisitor = std::function<bool(std::span<const Height>)>;

/// Depth-first walk over Hom_{anchor}(G, Z). Vertices are assigned in BFS order
/// from the anchor; each new vertex takes a value from the intersection of
/// {w - 1, w + 1} over its already assigned neighbors, smallest first. The
/// order is therefore a pure function of the graph. Returns the number of
/// homomorphisms visited. Non-bipartite graphs visit nothing.
std::uint64_t for_each_homomorphism(const Graph& g, const HomVisitor& visit);

/// Counts (and, up to `cap` items, materializes) every anchored homomorphism.
EnumerationResult enumerate(const GraphPtr& g, std::size_t cap = 0);

inline constexpr std::uint64_t kDefaultSampleCap = 50'000'000;

/// Exactly uniform draw from Hom_{anchor}(G, Z): count, draw a uniform index,
/// walk the enumeration to it. Throws std::domain_error when the set is empty
/// or larger than `cap`.
Homomorphism uniform_sample_by_enumeration(const GraphPtr& g, Rng& rng,
                                           std::uint64_t cap = kDefaultSampleCap);

/// Index of `values` in the enumeration order of g, for histogramming
/// samples. Built once, then queried.
class EnumerationIndex {
 public:
  explicit EnumerationIndex(const Graph& g);
  std::size_t size() const { return index_.size(); }
  /// Position of `values`, or nullopt if it is not an anchored homomorphism.
  std::optional<std::size_t> find(std::span<const Height> values) const;
  const std::vector<Height>& at(std::size_t i) const { return items_[i]; }

 private:
  std::vector<std::vector<Height>> items_;
  std::map<std::vector<Height>, std::size_t> index_;
};

}  // namespace ghom

#endif  // GHOM_ENUMERATOR_HPP_
