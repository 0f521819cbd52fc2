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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdlib>

#include "bohrlab/report.hpp"

using namespace bohrlab;

TEST_CASE("doubles round-trip through 17 significant digits") {
  for (double x : {1.0 / 3.0, 0.17157287525380990, 1e-300, 6.02214076e23,
                   -0.1, 2.0, 0.0}) {
    const std::string s = format_double(x);
    CHECK(std::strtod(s.c_str(), nullptr) == x);
  }
}

TEST_CASE("json envelope shape and ordering") {
  ReportEnvelope env;
  env.command = "radius";
  env.param("codomain", "halfplane");
  env.param("tol", 1e-12);
  env.seed = 7;
  env.certified = true;
  ReportRow row;
  row.str("row", "bracket").num("radius_lo", 1.0 / 3.0).integer("iterations", 52)
      .boolean("pass", true);
  env.rows.push_back(row);

  const std::string json = to_json(env);
  CHECK(json.find("\"command\":\"radius\"") != std::string::npos);
  CHECK(json.find("\"codomain\":\"halfplane\"") != std::string::npos);
  CHECK(json.find("\"seed\":7") != std::string::npos);
  CHECK(json.find("\"certified\":true") != std::string::npos);
  CHECK(json.find("\"radius_lo\":0.33333333333333331") != std::string::npos);
  CHECK(json.find("\"iterations\":52") != std::string::npos);
  CHECK(json.find("\"pass\":true") != std::string::npos);
  // params precede seed, rows come last
  CHECK(json.find("\"params\"") < json.find("\"seed\""));
  CHECK(json.find("\"seed\"") < json.find("\"rows\""));
  CHECK(json.back() == '\n');
}

TEST_CASE("json escapes control characters and quotes") {
  ReportEnvelope env;
  env.command = "x\"y";
  ReportRow row;
  row.str("k", "a\nb\\c");
  env.rows.push_back(row);
  const std::string json = to_json(env);
  CHECK(json.find("x\\\"y") != std::string::npos);
  CHECK(json.find("a\\nb\\\\c") != std::string::npos);
}

TEST_CASE("csv uses the union of row keys in first-appearance order") {
  ReportEnvelope env;
  env.command = "verify";
  env.param("suite", "demo");
  env.seed = 3;
  ReportRow r1;
  r1.str("property", "alpha").num("value", 0.5);
  ReportRow r2;
  r2.str("property", "beta").num("value", 1.5).boolean("pass", false);
  env.rows.push_back(r1);
  env.rows.push_back(r2);

  const std::string csv = to_csv(env);
  CHECK(csv.find("# command=verify") != std::string::npos);
  CHECK(csv.find("# param suite=demo") != std::string::npos);
  CHECK(csv.find("property,value,pass\n") != std::string::npos);
  CHECK(csv.find("alpha,0.5,\n") != std::string::npos);
  CHECK(csv.find("beta,1.5,false\n") != std::string::npos);
}

TEST_CASE("serialization is reproducible") {
  ReportEnvelope env;
  env.command = "metric";
  env.param("samples", static_cast<long long>(100));
  ReportRow row;
  row.num("value", 0.7071067811865475);
  env.rows.push_back(row);
  CHECK(to_json(env) == to_json(env));
  CHECK(to_csv(env) == to_csv(env));
}
