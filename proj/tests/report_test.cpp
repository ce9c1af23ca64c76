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

#include "ghom/report.hpp"

namespace ghom {
namespace {

ExperimentReport sample_report() {
  ExperimentReport r;
  r.experiment = "bridge-range";
  r.seed = 18446744073709551615ull;
  ReportRow a;
  a.params = "m=100;alpha=0.5;T=5";
  a.quantity = "Pr[hit T]";
  a.method = Method::kClosedForm;
  a.value = 0.60728888780719234;
  a.bound = 0.45;
  a.relation = ">=";
  a.pass = true;
  ReportRow b = a;
  b.method = Method::kSampled;
  b.value = 1.0 / 3.0;
  b.std_error = 1e-300;
  b.relation = "~=";
  b.draws = 12345;
  b.pass = false;
  ReportRow c;
  c.params = "graph=torus:4;r=1;c=0.5";
  c.quantity = "E[R]";
  c.method = Method::kEnumeration;
  c.value = -0.0;
  r.rows = {a, b, c};
  return r;
}

TEST(Report, CsvRoundTrip) {
  const auto r = sample_report();
  std::stringstream buf;
  write_csv(r, buf);
  EXPECT_EQ(buf.str().rfind("# experiment=bridge-range seed=18446744073709551615\n", 0), 0u);
  EXPECT_EQ(read_csv(buf), r);
}

TEST(Report, JsonRoundTrip) {
  const auto r = sample_report();
  std::stringstream buf;
  write_json(r, buf);
  EXPECT_EQ(read_json(buf), r);
}

TEST(Report, AllPass) {
  auto r = sample_report();
  EXPECT_FALSE(r.all_pass());
  r.rows[1].pass = std::nullopt;
  EXPECT_TRUE(r.all_pass());
}

TEST(Report, RejectsReservedCharacters) {
  auto r = sample_report();
  r.rows[0].params = "a=1,b=2";
  std::stringstream buf;
  EXPECT_THROW(write_csv(r, buf), std::invalid_argument);
}

TEST(Report, RejectsMalformedCsv) {
  std::istringstream no_header("params,quantity\n");
  EXPECT_THROW(read_csv(no_header), std::invalid_argument);
  std::istringstream bad_row(
      "# experiment=x seed=0\n"
      "params,quantity,method,value,std_error,bound,relation,draws,pass\n"
      "a,b,guessed,1,0,0,,0,\n");
  EXPECT_THROW(read_csv(bad_row), std::invalid_argument);
}

}  // namespace
}  // namespace ghom
