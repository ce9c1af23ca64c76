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

#include "ghom/enumerator.hpp"

#include <stdexcept>

namespace ghom {
namespace {

class Walker {
 public:
  Walker(const Graph& g, const HomVisitor& visit)
      : g_(g), visit_(visit), order_(g.bfs_order()), position_(g.vertex_count()),
        values_(g.vertex_count(), 0) {
    for (std::size_t i = 0; i < order_.size(); ++i) position_[order_[i]] = i;
  }

  std::uint64_t run() {
    if (!g_.is_bipartite()) return 0;
    values_[g_.anchor()] = 0;
    descend(1);
    return visited_;
  }

 private:
  // Returns false once the visitor asked to stop.
  bool descend(std::size_t depth) {
    if (depth == order_.size()) {
      ++visited_;
      return visit_(values_);
    }
    const Vertex v = order_[depth];
    // Candidate set from assigned neighbors; the BFS parent always exists.
    bool have = false;
    Height lo = 0, hi = 0;  // candidates are a subset of {lo, hi}
    bool lo_ok = true, hi_ok = true;
    for (Vertex w : g_.neighbors(v)) {
      if (position_[w] >= depth) continue;
      const Height x = values_[w];
      if (!have) {
        have = true;
        lo = x - 1;
        hi = x + 1;
        continue;
      }
      lo_ok = lo_ok && (x - lo == 1 || lo - x == 1);
      hi_ok = hi_ok && (x - hi == 1 || hi - x == 1);
    }
    if (lo_ok) {
      values_[v] = lo;
      if (!descend(depth + 1)) return false;
    }
    if (hi_ok) {
      values_[v] = hi;
      if (!descend(depth + 1)) return false;
    }
    return true;
  }

  const Graph& g_;
  const HomVisitor& visit_;
  std::vector<Vertex> order_;
  std::vector<std::size_t> position_;
  std::vector<Height> values_;
  std::uint64_t visited_ = 0;
};

}  // namespace

std::uint64_t for_each_homomorphism(const Graph& g, const HomVisitor& visit) {
  return Walker(g, visit).run();
}

EnumerationResult enumerate(const GraphPtr& g, std::size_t cap) {
  EnumerationResult result;
  std::vector<std::vector<Height>> kept;
  bool overflow = false;
  // Distinct-value tally over a window of size 2|G|+1 centered at 0.
  const auto n = static_cast<Height>(g->vertex_count());
  std::vector<std::size_t> seen(2 * n + 1);
  std::map<std::size_t, std::uint64_t> hist;
  const std::uint64_t total = for_each_homomorphism(*g, [&](std::span<const Height> v) {
    std::size_t distinct = 0;
    for (Height x : v) {
      if (seen[x + n]++ == 0) ++distinct;
    }
    for (Height x : v) seen[x + n] = 0;
    ++hist[distinct];
    if (!overflow) {
      if (kept.size() < cap) {
        kept.emplace_back(v.begin(), v.end());
      } else {
        overflow = true;
        kept.clear();
      }
    }
    return true;
  });
  result.count = total;
  for (auto [size, c] : hist) result.range_histogram[size] = c;
  if (!overflow && cap > 0) {
    std::vector<Homomorphism> items;
    items.reserve(kept.size());
    for (auto& v : kept) items.push_back(Homomorphism::anchored(g, std::move(v)));
    result.items = std::move(items);
  }
  return result;
}

Homomorphism uniform_sample_by_enumeration(const GraphPtr& g, Rng& rng,
                                           std::uint64_t cap) {
  std::uint64_t count = 0;
  for_each_homomorphism(*g, [&](std::span<const Height>) { return ++count <= cap; });
  if (count == 0) throw std::domain_error("graph has no homomorphisms into Z");
  if (count > cap) throw std::domain_error("homomorphism set larger than sampling cap");
  const std::uint64_t target = uniform_below(count, rng);
  std::vector<Height> chosen;
  std::uint64_t i = 0;
  for_each_homomorphism(*g, [&](std::span<const Height> v) {
    if (i++ == target) {
      chosen.assign(v.begin(), v.end());
      return false;
    }
    return true;
  });
  return Homomorphism::anchored(g, std::move(chosen));
}

EnumerationIndex::EnumerationIndex(const Graph& g) {
  for_each_homomorphism(g, [&](std::span<const Height> v) {
    index_.emplace(std::vector<Height>(v.begin(), v.end()), items_.size());
    items_.emplace_back(v.begin(), v.end());
    return true;
  });
}

std::optional<std::size_t> EnumerationIndex::find(std::span<const Height> values) const {
  auto it = index_.find(std::vector<Height>(values.begin(), values.end()));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

}  // namespace ghom
