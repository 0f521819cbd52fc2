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

#include "bohrlab/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>

#include "bohrlab/oracles.hpp"
#include "bohrlab/rng.hpp"
#include "bohrlab/slices.hpp"

namespace bohrlab::kernels {

namespace {

struct SampleBounds {
  long long violated_terms = 0;
  double max_excess = 0.0;
  double max_magnitude = 0.0;
};

SampleBounds caratheodory_one(std::uint64_t sample_seed, int order, double slack) {
  const HerglotzMeasure mu = random_herglotz(sample_seed);
  const TruncatedSeries p = caratheodory_from_measure(mu, order);
  const BoundReport rep = caratheodory_bound_check(p, slack);
  return {static_cast<long long>(rep.violations.size()), rep.max_excess,
          rep.max_magnitude};
}

SampleBounds debranges_one(std::uint64_t sample_seed, int order, double slack) {
  const SchurParams params = random_schur(sample_seed);
  const TruncatedSeries w = schur_self_map(params, order);
  const TruncatedSeries f = compose(koebe_square_series(order, 1.0), w);
  const BoundReport rep = debranges_check(f, 4.0, slack);
  return {static_cast<long long>(rep.violations.size()), rep.max_excess,
          rep.max_magnitude};
}

// Deterministic in-order reduction of per-sample slots.
template <typename OneFn>
BoundScanStats bound_scan(long long samples, int order, std::uint64_t seed, double slack,
                          bool parallel, OneFn one) {
  std::vector<SampleBounds> slots(static_cast<std::size_t>(samples));
#ifdef _OPENMP
#pragma omp parallel for schedule(static) if (parallel)
#endif
  for (long long i = 0; i < samples; ++i) {
    slots[static_cast<std::size_t>(i)] =
        one(derive_seed(seed, static_cast<std::uint64_t>(i)), order, slack);
  }
  (void)parallel;
  BoundScanStats out;
  out.samples = samples;
  out.max_excess = -1e300;
  for (const SampleBounds& s : slots) {
    out.violated_terms += s.violated_terms;
    if (s.violated_terms > 0) ++out.violations;
    out.max_excess = std::max(out.max_excess, s.max_excess);
    out.max_magnitude = std::max(out.max_magnitude, s.max_magnitude);
  }
  return out;
}

SpherePoint random_sphere_point(SplitMix64& g) {
  if (g.next_unit() < 0.1) return SpherePoint::infinity();
  const double scale = std::exp(g.next_range(-1.0, 3.0));
  return SpherePoint(cplx{scale * g.next_gaussian(), scale * g.next_gaussian()});
}

struct TripleResult {
  double triangle = 0.0;
  double symmetry = 0.0;
};

TripleResult triangle_one(std::uint64_t sample_seed) {
  SplitMix64 g(sample_seed);
  const SpherePoint a = random_sphere_point(g);
  const SpherePoint b = random_sphere_point(g);
  const SpherePoint c = random_sphere_point(g);
  const double ab = spherical_lambda(a, b);
  const double bc = spherical_lambda(b, c);
  const double ac = spherical_lambda(a, c);
  return {ac - ab - bc, std::abs(ab - spherical_lambda(b, a))};
}

TriangleScanStats triangle_scan(long long samples, std::uint64_t seed, bool parallel) {
  std::vector<TripleResult> slots(static_cast<std::size_t>(samples));
#ifdef _OPENMP
#pragma omp parallel for schedule(static) if (parallel)
#endif
  for (long long i = 0; i < samples; ++i) {
    slots[static_cast<std::size_t>(i)] =
        triangle_one(derive_seed(seed, static_cast<std::uint64_t>(i)));
  }
  (void)parallel;
  TriangleScanStats out;
  out.samples = samples;
  out.max_triangle_violation = -1e300;
  for (const TripleResult& t : slots) {
    out.max_triangle_violation = std::max(out.max_triangle_violation, t.triangle);
    out.max_symmetry_gap = std::max(out.max_symmetry_gap, t.symmetry);
  }
  return out;
}

double slice_margin_one(const SliceFunction& f, const Codomain& kind, double r,
                        const std::vector<cplx>& y, PuncturedGap gap_mode) {
  const TruncatedSeries s = slice_series(f, y);
  if (kind.kind == CodomainKind::ExteriorDisk) return spherical_margin(s, r);
  return euclidean_margin(s, kind, r, gap_mode);
}

std::vector<double> slice_margin_sweep(const SliceFunction& f, const Codomain& kind,
                                       double r,
                                       const std::vector<std::vector<cplx>>& dirs,
                                       PuncturedGap gap_mode, bool parallel) {
  std::vector<double> out(dirs.size());
  const long long n = static_cast<long long>(dirs.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(static) if (parallel)
#endif
  for (long long i = 0; i < n; ++i) {
    out[static_cast<std::size_t>(i)] =
        slice_margin_one(f, kind, r, dirs[static_cast<std::size_t>(i)], gap_mode);
  }
  (void)parallel;
  return out;
}

}  // namespace

BoundScanStats caratheodory_scan_seq(long long samples, int order, std::uint64_t seed,
                                     double slack) {
  return bound_scan(samples, order, seed, slack, false, caratheodory_one);
}

BoundScanStats caratheodory_scan_omp(long long samples, int order, std::uint64_t seed,
                                     double slack) {
  return bound_scan(samples, order, seed, slack, true, caratheodory_one);
}

BoundScanStats caratheodory_scan(long long samples, int order, std::uint64_t seed,
                                 double slack, Exec how) {
  return how == Exec::Serial ? caratheodory_scan_seq(samples, order, seed, slack)
                             : caratheodory_scan_omp(samples, order, seed, slack);
}

BoundScanStats debranges_scan_seq(long long samples, int order, std::uint64_t seed,
                                  double slack) {
  return bound_scan(samples, order, seed, slack, false, debranges_one);
}

BoundScanStats debranges_scan_omp(long long samples, int order, std::uint64_t seed,
                                  double slack) {
  return bound_scan(samples, order, seed, slack, true, debranges_one);
}

BoundScanStats debranges_scan(long long samples, int order, std::uint64_t seed,
                              double slack, Exec how) {
  return how == Exec::Serial ? debranges_scan_seq(samples, order, seed, slack)
                             : debranges_scan_omp(samples, order, seed, slack);
}

TriangleScanStats spherical_triangle_scan_seq(long long samples, std::uint64_t seed) {
  return triangle_scan(samples, seed, false);
}

TriangleScanStats spherical_triangle_scan_omp(long long samples, std::uint64_t seed) {
  return triangle_scan(samples, seed, true);
}

TriangleScanStats spherical_triangle_scan(long long samples, std::uint64_t seed, Exec how) {
  return how == Exec::Serial ? spherical_triangle_scan_seq(samples, seed)
                             : spherical_triangle_scan_omp(samples, seed);
}

std::vector<double> slice_margins_seq(const SliceFunction& f, const Codomain& kind,
                                      double r,
                                      const std::vector<std::vector<cplx>>& dirs,
                                      PuncturedGap gap_mode) {
  return slice_margin_sweep(f, kind, r, dirs, gap_mode, false);
}

std::vector<double> slice_margins_omp(const SliceFunction& f, const Codomain& kind,
                                      double r,
                                      const std::vector<std::vector<cplx>>& dirs,
                                      PuncturedGap gap_mode) {
  return slice_margin_sweep(f, kind, r, dirs, gap_mode, true);
}

std::vector<double> slice_margins(const SliceFunction& f, const Codomain& kind, double r,
                                  const std::vector<std::vector<cplx>>& dirs,
                                  PuncturedGap gap_mode, Exec how) {
  return how == Exec::Serial ? slice_margins_seq(f, kind, r, dirs, gap_mode)
                             : slice_margins_omp(f, kind, r, dirs, gap_mode);
}

}  // namespace bohrlab::kernels
