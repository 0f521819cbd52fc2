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

#include "bohrlab/kernels.hpp"
#include "bohrlab/rng.hpp"
#include "bohrlab/slices.hpp"

using namespace bohrlab;

namespace {

bool same(const kernels::BoundScanStats& a, const kernels::BoundScanStats& b) {
  return a.samples == b.samples && a.violations == b.violations &&
         a.violated_terms == b.violated_terms && a.max_excess == b.max_excess &&
         a.max_magnitude == b.max_magnitude;
}

}  // namespace

TEST_CASE("caratheodory scan: clean at order 50, serial == parallel") {
  const auto seq = kernels::caratheodory_scan_seq(300, 50, 7, 1e-12);
  const auto omp = kernels::caratheodory_scan_omp(300, 50, 7, 1e-12);
  CHECK(same(seq, omp));
  CHECK(seq.violations == 0);
  CHECK(seq.max_magnitude <= 2.0 + 1e-12);
  CHECK(seq.max_excess <= 1e-12);
}

TEST_CASE("caratheodory scan is deterministic per seed") {
  const auto a = kernels::caratheodory_scan(200, 40, 123, 1e-12, Exec::OpenMP);
  const auto b = kernels::caratheodory_scan(200, 40, 123, 1e-12, Exec::OpenMP);
  CHECK(same(a, b));
  const auto c = kernels::caratheodory_scan(200, 40, 124, 1e-12, Exec::OpenMP);
  CHECK(c.max_magnitude != a.max_magnitude);  // different seed, different draw
}

TEST_CASE("debranges scan: clean and mode-independent") {
  const auto seq = kernels::debranges_scan_seq(100, 50, 7, 1e-10);
  const auto omp = kernels::debranges_scan_omp(100, 50, 7, 1e-10);
  CHECK(same(seq, omp));
  CHECK(seq.violations == 0);
}

TEST_CASE("triangle scan: metric axioms on mixed finite/infinite triples") {
  const auto seq = kernels::spherical_triangle_scan_seq(20000, 7);
  const auto omp = kernels::spherical_triangle_scan_omp(20000, 7);
  CHECK(seq.max_triangle_violation == omp.max_triangle_violation);
  CHECK(seq.max_symmetry_gap == omp.max_symmetry_gap);
  CHECK(seq.max_symmetry_gap == 0.0);
  CHECK(seq.max_triangle_violation <= 1e-12);
}

TEST_CASE("slice margin sweep: serial == parallel over all codomains") {
  std::uint64_t task = 0;
  for (const Codomain& kind : {Codomain::half_plane(), Codomain::slit(),
                               Codomain::punctured(), Codomain::exterior()}) {
    const BalancedBall ball{8, 2.0};
    const Vec v = boundary_sample(ball, 1, derive_seed(4, task))[0];
    const SliceFunction f = build_witness(kind, ball, v, 0.9, {0.01, 1.5});
    const auto dirs = boundary_sample(ball, 50, derive_seed(5, task++));
    const auto a = kernels::slice_margins_seq(f, kind, 0.2, dirs,
                                              PuncturedGap::EuclideanDistance);
    const auto b = kernels::slice_margins_omp(f, kind, 0.2, dirs,
                                              PuncturedGap::EuclideanDistance);
    CHECK(a == b);
  }
}
