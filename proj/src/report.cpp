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

#include "bohrlab/report.hpp"

#include <algorithm>
#include <cstdio>

namespace bohrlab {

namespace {

std::string json_escape(const std::string& s) {
  std::string out;
  out.reserve(s.size() + 2);
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      case '\r': out += "\\r"; break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof buf, "\\u%04x", c);
          out += buf;
        } else {
          out += c;
        }
    }
  }
  return out;
}

std::string value_to_string(const ReportValue& v, bool quote_strings) {
  if (std::holds_alternative<double>(v)) return format_double(std::get<double>(v));
  if (std::holds_alternative<long long>(v))
    return std::to_string(std::get<long long>(v));
  if (std::holds_alternative<bool>(v)) return std::get<bool>(v) ? "true" : "false";
  const std::string& s = std::get<std::string>(v);
  return quote_strings ? "\"" + json_escape(s) + "\"" : s;
}

}  // namespace

ReportRow& ReportRow::num(std::string key, double v) {
  fields.emplace_back(std::move(key), v);
  return *this;
}
ReportRow& ReportRow::integer(std::string key, long long v) {
  fields.emplace_back(std::move(key), v);
  return *this;
}
ReportRow& ReportRow::str(std::string key, std::string v) {
  fields.emplace_back(std::move(key), ReportValue(std::move(v)));
  return *this;
}
ReportRow& ReportRow::boolean(std::string key, bool v) {
  fields.emplace_back(std::move(key), v);
  return *this;
}

void ReportEnvelope::param(std::string key, std::string value) {
  params.emplace_back(std::move(key), std::move(value));
}
void ReportEnvelope::param(std::string key, double value) {
  params.emplace_back(std::move(key), format_double(value));
}
void ReportEnvelope::param(std::string key, long long value) {
  params.emplace_back(std::move(key), std::to_string(value));
}

std::string format_double(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string to_json(const ReportEnvelope& env) {
  std::string out = "{\"command\":\"" + json_escape(env.command) + "\",\"params\":{";
  for (std::size_t i = 0; i < env.params.size(); ++i) {
    if (i) out += ',';
    out += "\"" + json_escape(env.params[i].first) + "\":\"" +
           json_escape(env.params[i].second) + "\"";
  }
  out += "},\"seed\":" + std::to_string(env.seed);
  out += ",\"certified\":";
  out += env.certified ? "true" : "false";
  out += ",\"rows\":[";
  for (std::size_t i = 0; i < env.rows.size(); ++i) {
    if (i) out += ',';
    out += '{';
    const auto& fields = env.rows[i].fields;
    for (std::size_t j = 0; j < fields.size(); ++j) {
      if (j) out += ',';
      out += "\"" + json_escape(fields[j].first) +
             "\":" + value_to_string(fields[j].second, true);
    }
    out += '}';
  }
  out += "]}\n";
  return out;
}

std::string to_csv(const ReportEnvelope& env) {
  std::string out = "# command=" + env.command + "\n";
  for (const auto& [k, v] : env.params) out += "# param " + k + "=" + v + "\n";
  out += "# seed=" + std::to_string(env.seed) + "\n";
  out += std::string("# certified=") + (env.certified ? "true" : "false") + "\n";

  std::vector<std::string> columns;
  for (const ReportRow& row : env.rows) {
    for (const auto& [k, v] : row.fields) {
      if (std::find(columns.begin(), columns.end(), k) == columns.end())
        columns.push_back(k);
    }
  }
  for (std::size_t i = 0; i < columns.size(); ++i) {
    if (i) out += ',';
    out += columns[i];
  }
  out += '\n';
  for (const ReportRow& row : env.rows) {
    for (std::size_t i = 0; i < columns.size(); ++i) {
      if (i) out += ',';
      const auto it = std::find_if(row.fields.begin(), row.fields.end(),
                                   [&](const auto& f) { return f.first == columns[i]; });
      if (it != row.fields.end()) out += value_to_string(it->second, false);
    }
    out += '\n';
  }
  return out;
}

}  // namespace bohrlab
