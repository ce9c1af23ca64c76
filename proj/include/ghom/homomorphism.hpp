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

#ifndef GHOM_HOMOMORPHISM_HPP_
#define GHOM_HOMOMORPHISM_HPP_

#include <cstdint>
#include <istream>
#include <ostream>
#include <span>
#include <vector>

#include "ghom/graph.hpp"

namespace ghom {

using Height = std::int64_t;

/// A map from the vertices of a graph into Z with |f(u) - f(v)| = 1 across
/// every edge.
///
/// The main constructor also requires f(anchor) = 0. Ball-local work and
/// translations go through anchor_free(), which drops that requirement.
class Homomorphism {
 public:
  /// Throws std::invalid_argument unless `values` is a homomorphism of `graph`
  /// with the anchor mapped to 0.
  static Homomorphism anchored(GraphPtr graph, std::vector<Height> values);
  /// Throws std::invalid_argument unless `values` is a homomorphism of `graph`.
  static Homomorphism anchor_free(GraphPtr graph, std::vector<Height> values);

  const Graph& graph() const { return *graph_; }
  const GraphPtr& graph_ptr() const { return graph_; }
  std::span<const Height> values() const { return values_; }
  Height operator[](Vertex v) const { return values_[v]; }
  std::size_t size() const { return values_.size(); }
  bool is_anchored() const { return values_[graph_->anchor()] == 0; }

  friend bool operator==(const Homomorphism& a, const Homomorphism& b) {
    return a.values_ == b.values_;
  }

 private:
  Homomorphism(GraphPtr graph, std::vector<Height> values)
      : graph_(std::move(graph)), values_(std::move(values)) {}

  GraphPtr graph_;
  std::vector<Height> values_;
};

/// True iff `values` has one entry per vertex, differs by exactly one across
/// every edge and (when require_anchor) maps the anchor to 0.
bool is_homomorphism(const Graph& g, std::span<const Height> values,
                     bool require_anchor = true);

/// Re-checks the edge condition and the anchor.
bool validate(const Homomorphism& h);

struct RangeStats {
  Height min = 0;
  Height max = 0;
  /// R(f): number of distinct values.
  std::size_t range_size = 0;
  /// f(G), sorted.
  std::vector<Height> range_set;
};

RangeStats range(std::span<const Height> values);
inline RangeStats range(const Homomorphism& h) { return range(h.values()); }

/// -f. Anchored inputs stay anchored.
Homomorphism reflect(const Homomorphism& h);
/// f + z, as an anchor-free homomorphism.
Homomorphism translate(const Homomorphism& h, Height z);

/// Raises the range inside an exact-radius ball without touching its boundary.
///
/// Returns g with g = h outside members \ boundary and |g(members)| >= r + 1.
/// Inside the ball the values are shifted so min over the boundary is 0, folded
/// by absolute value, and then for i = 1..r every vertex of B_{r-i} sitting at
/// height i-1 is lifted to i+1; finally the shift is undone. Any vertex outside
/// the ball adjacent to it touches only the boundary, so g stays a global
/// homomorphism; the anchor lies outside the ball, so g stays anchored when h is.
///
/// Throws std::invalid_argument if the ball is not exact, contains the anchor,
/// or does not belong to h's graph.
Homomorphism repair_ball(const Homomorphism& h, const Ball& b);

/// One "index value" line per vertex.
void write_homomorphism(const Homomorphism& h, std::ostream& out);
/// Reads the format above; every vertex must appear exactly once. The result is
/// checked as an anchor-free homomorphism.
Homomorphism read_homomorphism(GraphPtr graph, std::istream& in);
/// Reads the raw values without validating them.
std::vector<Height> read_values(std::size_t vertex_count, std::istream& in);

}  // namespace ghom

#endif  // GHOM_HOMOMORPHISM_HPP_
