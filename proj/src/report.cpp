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

#include "ghom/report.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace ghom {
namespace {

const char* const kHeader = "params,quantity,method,value,std_error,bound,relation,draws,pass";

std::string format_double(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

double parse_double(const std::string& s) {
  std::size_t used = 0;
  const double x = std::stod(s, &used);
  if (used != s.size()) throw std::invalid_argument("bad number: " + s);
  return x;
}

std::uint64_t parse_u64(const std::string& s) {
  std::uint64_t x = 0;
  const auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), x);
  if (ec != std::errc{} || p != s.data() + s.size()) {
    throw std::invalid_argument("bad integer: " + s);
  }
  return x;
}

const std::string& checked_field(const std::string& s) {
  if (s.find_first_of(",\"\n\r") != std::string::npos) {
    throw std::invalid_argument("report field contains a reserved character: " + s);
  }
  return s;
}

std::string pass_text(const std::optional<bool>& p) {
  if (!p) return "";
  return *p ? "pass" : "fail";
}

std::optional<bool> parse_pass(const std::string& s) {
  if (s.empty()) return std::nullopt;
  if (s == "pass") return true;
  if (s == "fail") return false;
  throw std::invalid_argument("bad pass field: " + s);
}

std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : line) {
    if (ch == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(ch);
    }
  }
  out.push_back(cur);
  return out;
}

}  // namespace

std::string to_string(Method m) {
  switch (m) {
    case Method::kClosedForm: return "closed-form";
    case Method::kEnumeration: return "enumeration";
    case Method::kSampled: return "sampled";
  }
  return "?";
}

Method parse_method(const std::string& text) {
  if (text == "closed-form") return Method::kClosedForm;
  if (text == "enumeration") return Method::kEnumeration;
  if (text == "sampled") return Method::kSampled;
  throw std::invalid_argument("unknown method: " + text);
}

bool ExperimentReport::all_pass() const {
  return std::all_of(rows.begin(), rows.end(),
                     [](const ReportRow& r) { return r.pass.value_or(true); });
}

void write_csv(const ExperimentReport& r, std::ostream& out) {
  out << "# experiment=" << checked_field(r.experiment) << " seed=" << r.seed << '\n';
  out << kHeader << '\n';
  for (const auto& row : r.rows) {
    out << checked_field(row.params) << ',' << checked_field(row.quantity) << ','
        << to_string(row.method) << ',' << format_double(row.value) << ','
        << format_double(row.std_error) << ',' << format_double(row.bound) << ','
        << checked_field(row.relation) << ',' << row.draws << ',' << pass_text(row.pass)
        << '\n';
  }
}

ExperimentReport read_csv(std::istream& in) {
  ExperimentReport r;
  std::string line;
  if (!std::getline(in, line) || line.rfind("# ", 0) != 0) {
    throw std::invalid_argument("report: missing header comment");
  }
  {
    std::istringstream hs(line.substr(2));
    std::string tok;
    bool have_id = false, have_seed = false;
    while (hs >> tok) {
      if (tok.rfind("experiment=", 0) == 0) {
        r.experiment = tok.substr(11);
        have_id = true;
      } else if (tok.rfind("seed=", 0) == 0) {
        r.seed = parse_u64(tok.substr(5));
        have_seed = true;
      }
    }
    if (!have_id || !have_seed) throw std::invalid_argument("report: incomplete header");
  }
  if (!std::getline(in, line) || line != kHeader) {
    throw std::invalid_argument("report: bad column header");
  }
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto f = split(line, ',');
    if (f.size() != 9) throw std::invalid_argument("report: bad row: " + line);
    ReportRow row;
    row.params = f[0];
    row.quantity = f[1];
    row.method = parse_method(f[2]);
    row.value = parse_double(f[3]);
    row.std_error = parse_double(f[4]);
    row.bound = parse_double(f[5]);
    row.relation = f[6];
    row.draws = parse_u64(f[7]);
    row.pass = parse_pass(f[8]);
    r.rows.push_back(std::move(row));
  }
  return r;
}

void write_json(const ExperimentReport& r, std::ostream& out) {
  nlohmann::json j;
  j["experiment"] = r.experiment;
  j["seed"] = r.seed;
  j["all_pass"] = r.all_pass();
  j["rows"] = nlohmann::json::array();
  for (const auto& row : r.rows) {
    nlohmann::json o;
    o["params"] = row.params;
    o["quantity"] = row.quantity;
    o["method"] = to_string(row.method);
    o["value"] = row.value;
    o["std_error"] = row.std_error;
    o["bound"] = row.bound;
    o["relation"] = row.relation;
    o["draws"] = row.draws;
    o["pass"] = row.pass ? nlohmann::json(*row.pass) : nlohmann::json(nullptr);
    j["rows"].push_back(std::move(o));
  }
  out << j.dump(2) << '\n';
}

ExperimentReport read_json(std::istream& in) {
  const auto j = nlohmann::json::parse(in);
  ExperimentReport r;
  r.experiment = j.at("experiment").get<std::string>();
  r.seed = j.at("seed").get<std::uint64_t>();
  for (const auto& o : j.at("rows")) {
    ReportRow row;
    row.params = o.at("params").get<std::string>();
    row.quantity = o.at("quantity").get<std::string>();
    row.method = parse_method(o.at("method").get<std::string>());
    row.value = o.at("value").get<double>();
    row.std_error = o.at("std_error").get<double>();
    row.bound = o.at("bound").get<double>();
    row.relation = o.at("relation").get<std::string>();
    row.draws = o.at("draws").get<std::uint64_t>();
    if (!o.at("pass").is_null()) row.pass = o.at("pass").get<bool>();
    r.rows.push_back(std::move(row));
  }
  return r;
}

std::string summary_line(const ReportRow& row) {
  std::ostringstream s;
  s << (row.pass ? (*row.pass ? "[pass] " : "[FAIL] ") : "[info] ") << row.params << "  "
    << row.quantity << " = " << row.value;
  if (row.method == Method::kSampled && row.std_error > 0) s << " +- " << row.std_error;
  if (!row.relation.empty()) s << "  " << row.relation << ' ' << row.bound;
  s << "  (" << to_string(row.method);
  if (row.draws) s << ", " << row.draws << " draws";
  s << ')';
  return s.str();
}

}  // namespace ghom
