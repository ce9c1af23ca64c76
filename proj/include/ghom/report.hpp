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

#ifndef GHOM_REPORT_HPP_
#define GHOM_REPORT_HPP_

#include <cstdint>
#include <istream>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace ghom {

enum class Method { kClosedForm, kEnumeration, kSampled };

std::string to_string(Method m);
Method parse_method(const std::string& text);

/// How `value` is compared with `bound`:
///   "<=" / ">="  one-sided inequality,
///   "~="         sampled value within 4 standard errors of an exact `bound`,
///   ""           no comparison.
/// Rows with `pass` unset are informational.
struct ReportRow {
  std::string params;    // "key=value;key=value"
  std::string quantity;
  Method method = Method::kClosedForm;
  double value = 0.0;
  double std_error = 0.0;
  double bound = 0.0;
  std::string relation;
  std::uint64_t draws = 0;
  std::optional<bool> pass;

  friend bool operator==(const ReportRow&, const ReportRow&) = default;
};

struct ExperimentReport {
  std::string experiment;
  std::uint64_t seed = 0;
  std::vector<ReportRow> rows;

  bool all_pass() const;

  friend bool operator==(const ExperimentReport&, const ExperimentReport&) = default;
};

/// CSV: a "# experiment=<id> seed=<seed>" line, a header line, one line per row.
/// Text fields may not contain commas, quotes or newlines (std::invalid_argument).
void write_csv(const ExperimentReport& r, std::ostream& out);
ExperimentReport read_csv(std::istream& in);

void write_json(const ExperimentReport& r, std::ostream& out);
ExperimentReport read_json(std::istream& in);

/// Human-oriented one-line summary per row, used by the CLI on stderr.
std::string summary_line(const ReportRow& row);

}  // namespace ghom

#endif  // GHOM_REPORT_HPP_
