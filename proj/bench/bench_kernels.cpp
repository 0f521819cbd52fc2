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

// Times each scan kernel's serial reference against the OpenMP variant and
// checks they agree bit for bit.

#include <chrono>
#include <cstdio>
#include <functional>

#include "bohrlab/kernels.hpp"
#include "bohrlab/slices.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace {

using namespace bohrlab;

double time_ms(const std::function<void()>& fn) {
  const auto t0 = std::chrono::steady_clock::now();
  fn();
  const auto t1 = std::chrono::steady_clock::now();
  return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

void report(const char* name, double seq_ms, double omp_ms, bool identical) {
  std::printf("%-28s seq %9.2f ms   omp %9.2f ms   speedup %5.2fx   identical %s\n",
              name, seq_ms, omp_ms, seq_ms / omp_ms, identical ? "yes" : "NO");
}

}  // namespace

int main() {
#ifdef _OPENMP
  std::printf("OpenMP threads: %d\n", omp_get_max_threads());
#else
  std::printf("built without OpenMP; omp variants run serially\n");
#endif

  {
    kernels::BoundScanStats a, b;
    const double ts = time_ms([&] { a = kernels::caratheodory_scan_seq(4000, 100, 7, 1e-12); });
    const double tp = time_ms([&] { b = kernels::caratheodory_scan_omp(4000, 100, 7, 1e-12); });
    report("caratheodory_scan", ts, tp,
           a.violations == b.violations && a.max_excess == b.max_excess &&
               a.max_magnitude == b.max_magnitude);
  }
  {
    kernels::BoundScanStats a, b;
    const double ts = time_ms([&] { a = kernels::debranges_scan_seq(1000, 80, 7, 1e-10); });
    const double tp = time_ms([&] { b = kernels::debranges_scan_omp(1000, 80, 7, 1e-10); });
    report("debranges_scan", ts, tp,
           a.violations == b.violations && a.max_excess == b.max_excess &&
               a.max_magnitude == b.max_magnitude);
  }
  {
    kernels::TriangleScanStats a, b;
    const double ts = time_ms([&] { a = kernels::spherical_triangle_scan_seq(4000000, 7); });
    const double tp = time_ms([&] { b = kernels::spherical_triangle_scan_omp(4000000, 7); });
    report("spherical_triangle_scan", ts, tp,
           a.max_triangle_violation == b.max_triangle_violation &&
               a.max_symmetry_gap == b.max_symmetry_gap);
  }
  {
    const BalancedBall ball{64, 2.0};
    const Vec v = boundary_sample(ball, 1, 99)[0];
    const SliceFunction f = build_witness(Codomain::half_plane(), ball, v, 0.9);
    const auto dirs = boundary_sample(ball, 4000, 7);
    std::vector<double> a, b;
    const double ts = time_ms([&] {
      a = kernels::slice_margins_seq(f, Codomain::half_plane(), 1.0 / 3.0, dirs,
                                     PuncturedGap::EuclideanDistance);
    });
    const double tp = time_ms([&] {
      b = kernels::slice_margins_omp(f, Codomain::half_plane(), 1.0 / 3.0, dirs,
                                     PuncturedGap::EuclideanDistance);
    });
    report("slice_margins", ts, tp, a == b);
  }
  return 0;
}
