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

#include <sstream>

#include "ghom/experiment.hpp"

namespace ghom {
namespace {

const ReportRow& find_row(const ExperimentReport& r, const std::string& params_prefix,
                          const std::string& quantity, Method method) {
  for (const auto& row : r.rows) {
    if (row.params.rfind(params_prefix, 0) == 0 && row.quantity == quantity && row.method == method) {
      return row;
    }
  }
  throw std::runtime_error("row not found: " + params_prefix + " " + quantity);
}

ExperimentSpec spec_for(ExperimentId id) {
  ExperimentSpec s;
  s.id = id;
  return s;
}

TEST(Spec, Defaults) {
  const auto s = normalized(spec_for(ExperimentId::kThresholdLower));
  EXPECT_EQ(s.n, (std::vector<std::size_t>{256, 1024, 4096}));
  EXPECT_EQ(s.psi, (std::vector<double>{4, 8}));
  EXPECT_EQ(s.seed, 0u);
  EXPECT_GE(s.draws, 1u);
  EXPECT_EQ(parse_experiment_id("torus"), ExperimentId::kTorus);
  EXPECT_THROW(parse_experiment_id("nope"), std::invalid_argument);
}

TEST(Spec, Preconditions) {
  auto s = spec_for(ExperimentId::kThresholdLower);
  s.eps = 0.2;
  EXPECT_THROW(normalized(s), std::invalid_argument);
  s.eps = 0.1;
  s.n = {16};
  s.psi = {2};
  s.beta = 5.0;  // > n/4
  EXPECT_THROW(normalized(s), std::invalid_argument);
  s.beta = 4.0;
  EXPECT_NO_THROW(normalized(s));
  s.psi = {8, 4};  // not monotone
  EXPECT_THROW(normalized(s), std::invalid_argument);
  s.n = {4};
  s.psi = {4};  // k = floor(4 - 4) = 0
  s.beta.reset();
  EXPECT_THROW(normalized(s), std::invalid_argument);

  auto b = spec_for(ExperimentId::kBridgeRange);
  b.n = {101};
  EXPECT_THROW(normalized(b), std::invalid_argument);
  auto t = spec_for(ExperimentId::kTorus);
  t.n = {5};
  EXPECT_THROW(normalized(t), std::invalid_argument);
  auto u = spec_for(ExperimentId::kThresholdUpper);
  u.n = {2};
  EXPECT_THROW(normalized(u), std::invalid_argument);
}

TEST(BridgeLevel, DecimalAlpha) {
  EXPECT_EQ(bridge_level(100, 0.1), 1u);
  EXPECT_EQ(bridge_level(100, 0.25), 3u);
  EXPECT_EQ(bridge_level(400, 0.5), 10u);
  EXPECT_EQ(bridge_level(1600, 0.1), 4u);
  EXPECT_EQ(bridge_level(4, 0.5), 1u);
}

TEST(BridgeRange, Examples) {
  auto s = spec_for(ExperimentId::kBridgeRange);
  s.n = {4, 400};
  s.alpha = {0.5, 1.5};
  s.draws = 2000;
  const auto r = run_bridge_range(s);
  EXPECT_TRUE(r.all_pass());
  EXPECT_DOUBLE_EQ(find_row(r, "m=4;alpha=0.5", "Pr[hit T]", Method::kClosedForm).value, 2.0 / 3.0);
  EXPECT_GE(find_row(r, "m=400;alpha=0.5", "Pr[hit T]", Method::kClosedForm).value, 0.45);
  const auto& vacuous = find_row(r, "m=400;alpha=1.5", "Pr[hit T]", Method::kClosedForm);
  EXPECT_TRUE(vacuous.pass.value_or(false));
}

TEST(BridgeRange, DefaultGridPasses) {
  const auto r = run_bridge_range(spec_for(ExperimentId::kBridgeRange));
  EXPECT_EQ(r.seed, 0u);
  EXPECT_TRUE(r.all_pass());
}

TEST(ThresholdUpper, DefaultPoint) {
  const auto r = run_threshold_upper(spec_for(ExperimentId::kThresholdUpper));
  ASSERT_TRUE(r.all_pass());
  const auto& exact = find_row(r, "n=64;k=18", "Pr[NC<n/2]", Method::kClosedForm);
  EXPECT_LE(exact.value, 2.0 / 64.0);
  EXPECT_DOUBLE_EQ(exact.bound, 1.0 / 32.0);
  EXPECT_GE(find_row(r, "n=64;k=18", "Pr[R<=3]", Method::kSampled).value, 0.95);
}

TEST(ThresholdUpper, ExplicitWidth) {
  auto s = spec_for(ExperimentId::kThresholdUpper);
  s.n = {4};
  s.k = {10};
  s.draws = 2000;
  const auto r = run_threshold_upper(s);
  EXPECT_TRUE(r.all_pass());
  EXPECT_NEAR(find_row(r, "n=4;k=10", "Pr0[NC<n/2]", Method::kClosedForm).value, 1.0 - 0.9942, 5e-5);
  EXPECT_GE(find_row(r, "n=4;k=10", "Pr[R<=3] lower bound", Method::kClosedForm).value, 0.99);
}

TEST(ThresholdLower, ExactTailsAndDegeneration) {
  auto s = spec_for(ExperimentId::kThresholdLower);
  s.n = {256, 400};
  s.psi = {4, 8};
  s.draws = 40;
  const auto r = run_threshold_lower(s);
  EXPECT_TRUE(r.all_pass());
  const auto& tail = find_row(r, "n=256;k=12;psi=4", "Pr0[NC>n/2-beta]", Method::kClosedForm);
  EXPECT_DOUBLE_EQ(tail.bound, 0.25);
  EXPECT_LE(tail.value, tail.bound);
  const auto& deg = find_row(r, "n=400;k=1;eps=0.1", "Pr[R>=2^(1/4)eps*sqrt(n)]", Method::kSampled);
  EXPECT_GE(deg.value, 0.64);
  EXPECT_TRUE(deg.pass.value_or(false));
}

TEST(Theorem1, SmallGraphs) {
  auto s = spec_for(ExperimentId::kTheorem1);
  s.graphs = {"torus:4", "cycle:12"};
  s.r = 1;
  const auto r = run_theorem1(s);
  EXPECT_TRUE(r.all_pass());
  EXPECT_EQ(find_row(r, "graph=torus:4", "Pr[R<=r]", Method::kEnumeration).value, 0.0);
  s.r = 2;
  const auto r2 = run_theorem1(s);
  EXPECT_TRUE(r2.all_pass());
  const auto& cyc = find_row(r2, "graph=cycle:12", "Pr[R<=r]", Method::kEnumeration);
  EXPECT_DOUBLE_EQ(cyc.value, 2.0 / 924.0);  // only the two zig-zags stay inside two values
}

TEST(Theorem1, DefaultGridPasses) {
  EXPECT_TRUE(run_theorem1(spec_for(ExperimentId::kTheorem1)).all_pass());
}

TEST(Torus, SmallSides) {
  auto s = spec_for(ExperimentId::kTorus);
  s.n = {4, 6};
  s.r = 1;
  s.draws = 1500;
  const auto r = run_torus(s);
  EXPECT_TRUE(r.all_pass());
  EXPECT_DOUBLE_EQ(find_row(r, "n=6", "V(r)", Method::kClosedForm).value, 5.0);
  EXPECT_EQ(find_row(r, "n=4", "Pr[R<=r]", Method::kEnumeration).value, 0.0);
}

TEST(Reports, ClosedFormRowsIgnoreTheSeed) {
  auto a = spec_for(ExperimentId::kBridgeRange);
  a.n = {100};
  a.draws = 50;
  auto b = a;
  b.seed = 12345;
  const auto ra = run_experiment(a), rb = run_experiment(b);
  ASSERT_EQ(ra.rows.size(), rb.rows.size());
  for (std::size_t i = 0; i < ra.rows.size(); ++i) {
    if (ra.rows[i].method == Method::kClosedForm) {
      EXPECT_EQ(ra.rows[i], rb.rows[i]);
    }
  }
  EXPECT_EQ(run_experiment(a), ra);  // fully reproducible for a fixed seed
}

TEST(Reports, RoundTripThroughBothFormats) {
  auto s = spec_for(ExperimentId::kTheorem1);
  s.graphs = {"cycle:8", "hypercube:3"};
  const auto r = run_experiment(s);
  std::stringstream csv, json;
  write_csv(r, csv);
  write_json(r, json);
  EXPECT_EQ(read_csv(csv), r);
  EXPECT_EQ(read_json(json), r);
}

}  // namespace
}  // namespace ghom
