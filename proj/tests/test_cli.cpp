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

#include <cstdio>
#include <cstdlib>
#include <string>

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

// Runs the CLI named by BOHRLAB_CLI with the given arguments.
RunResult run_cli(const std::string& args) {
  const char* bin = std::getenv("BOHRLAB_CLI");
  REQUIRE_MESSAGE(bin != nullptr, "BOHRLAB_CLI must point at the bohrlab binary");
  const std::string cmd = std::string(bin) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult res;
  char buf[4096];
  std::size_t got = 0;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) res.out.append(buf, got);
  const int status = pclose(pipe);
  res.exit_code = WEXITSTATUS(status);
  return res;
}

bool contains(const std::string& hay, const std::string& needle) {
  return hay.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("radius halfplane brackets 1/3") {
  const RunResult r = run_cli("radius --codomain halfplane --tol 1e-12");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.out, "\"command\":\"radius\""));
  CHECK(contains(r.out, "\"codomain\":\"halfplane\""));
  CHECK(contains(r.out, "\"certified\":true"));
  CHECK(contains(r.out, "0.3333333333333"));
}

TEST_CASE("radius slit brackets 3 - 2 sqrt(2)") {
  const RunResult r = run_cli("radius --codomain slit --tol 1e-12");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.out, "0.17157287525"));
}

TEST_CASE("radius punctured brackets 1/3") {
  const RunResult r = run_cli("radius --codomain punctured");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.out, "0.3333333333333"));
}

TEST_CASE("usage errors exit with 2") {
  CHECK(run_cli("radius --codomain klein-bottle").exit_code == 2);
  CHECK(run_cli("nonsense").exit_code == 2);
  CHECK(run_cli("radius --no-such-flag 1").exit_code == 2);
}

TEST_CASE("sharpness: violations at r0 = 0.4, none at r0 = 0.3") {
  const RunResult hit = run_cli("sharpness --codomain halfplane --r0 0.4");
  CHECK(hit.exit_code == 0);
  CHECK(contains(hit.out, "\"lhs\":2.125"));
  CHECK(contains(hit.out, "\"rhs\":2"));

  const RunResult miss = run_cli("sharpness --codomain halfplane --r0 0.3");
  CHECK(miss.exit_code == 3);
  CHECK(contains(miss.out, "\"rows\":[]"));
}

TEST_CASE("sharpness slit at r0 = 0.2 reports the squared ratio") {
  const RunResult r = run_cli("sharpness --codomain slit --r0 0.2");
  CHECK(r.exit_code == 0);
  // (1.18/0.82)^2 at c = 0.9
  CHECK(contains(r.out, "\"lhs\":2.070791195716835"));
}

TEST_CASE("verify caratheodory passes and is byte-deterministic") {
  const std::string cmd = "verify --suite caratheodory --samples 200 --seed 7";
  const RunResult a = run_cli(cmd);
  const RunResult b = run_cli(cmd);
  CHECK(a.exit_code == 0);
  CHECK(a.out == b.out);
  CHECK(contains(a.out, "\"violations\":0"));
  CHECK(contains(a.out, "\"seed\":7"));
}

TEST_CASE("verify debranges passes") {
  const RunResult r = run_cli("verify --suite debranges --samples 100 --seed 11");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.out, "\"violations\":0"));
}

TEST_CASE("verify exterior-limit converges to 4/3") {
  const RunResult r = run_cli("verify --suite exterior-limit");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.out, "\"limit\":1.3333333333333"));
  CHECK(contains(r.out, "\"property\":\"convergence\""));
}

TEST_CASE("verify multidim (small slice) passes") {
  const RunResult r = run_cli(
      "verify --suite multidim --samples 50 --seed 7 --dim 2,8 --p 2,inf");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.out, "\"witness\":\"halfplane\""));
  CHECK(contains(r.out, "\"expect\":\"violation_on_anchor\""));
}

TEST_CASE("BOHRLAB_SEED is the fallback seed") {
  const char* bin = std::getenv("BOHRLAB_CLI");
  REQUIRE(bin != nullptr);
  const std::string cmd = std::string("BOHRLAB_SEED=99 ") + bin +
                          " verify --suite caratheodory --samples 50 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buf[4096];
  std::size_t got = 0;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
  pclose(pipe);
  CHECK(contains(out, "\"seed\":99"));
}

TEST_CASE("coeffs dumps the selected family") {
  const RunResult r = run_cli("coeffs --family l --max-terms 4");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.out, "\"tail_constant\":\"2\""));
  CHECK(contains(r.out, "\"n\":4"));

  const RunResult ht = run_cli("coeffs --family ht --t 1 --max-terms 3 --format csv");
  CHECK(ht.exit_code == 0);
  CHECK(contains(ht.out, "n,re,im,abs"));
}

TEST_CASE("metric table contains the canonical values") {
  const RunResult r = run_cli("metric --samples 1000 --seed 7");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.out, "\"pair\":\"lambda(1,inf)\""));
  CHECK(contains(r.out, "0.70710678118654"));
  CHECK(contains(r.out, "\"property\":\"triangle\""));
}

TEST_CASE("csv format emits the envelope as comments plus a table") {
  const RunResult r = run_cli("radius --codomain halfplane --format csv");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.out, "# command=radius"));
  CHECK(contains(r.out, "# certified=true"));
  CHECK(contains(r.out, "row,radius_lo,radius_hi"));
}
