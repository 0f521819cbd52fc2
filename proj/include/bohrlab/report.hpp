// Copyright (c) 2026 The bohrlab authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef BOHRLAB_REPORT_HPP
#define BOHRLAB_REPORT_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace bohrlab {

/// One cell of a report row. Doubles serialize with 17 significant digits so
/// values round-trip exactly; everything is emitted in insertion order, which
/// makes reports byte-identical for identical inputs.
using ReportValue = std::variant<double, long long, std::string, bool>;

struct ReportRow {
  std::vector<std::pair<std::string, ReportValue>> fields;

  ReportRow& num(std::string key, double v);
  ReportRow& integer(std::string key, long long v);
  ReportRow& str(std::string key, std::string v);
  ReportRow& boolean(std::string key, bool v);
};

/// Machine-readable result of one CLI command: the command name, every input
/// flag echoed, the resolved seed, a certification flag, and the data rows.
struct ReportEnvelope {
  std::string command;
  std::vector<std::pair<std::string, std::string>> params;
  std::uint64_t seed = 0;
  bool certified = false;
  std::vector<ReportRow> rows;

  void param(std::string key, std::string value);
  void param(std::string key, double value);
  void param(std::string key, long long value);
};

/// %.17g: shortest fixed-precision form that round-trips IEEE doubles.
std::string format_double(double x);

std::string to_json(const ReportEnvelope& env);

/// Header/metadata as leading '#' comment lines, then a column header from
/// the union of row keys (first-appearance order) and one line per row.
std::string to_csv(const ReportEnvelope& env);

}  // namespace bohrlab

#endif  // BOHRLAB_REPORT_HPP
