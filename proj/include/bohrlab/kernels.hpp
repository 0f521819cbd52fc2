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

#ifndef BOHRLAB_KERNELS_HPP
#define BOHRLAB_KERNELS_HPP

#include <cstdint>
#include <vector>

#include "bohrlab/engine.hpp"

namespace bohrlab {

struct SliceFunction;

/// Execution mode for the sample-sweep kernels. Every kernel has a serial
/// reference and an OpenMP variant; per-sample work depends only on its
/// derived seed and results are reduced in index order, so the two produce
/// bit-identical output.
enum class Exec { Serial, OpenMP };

namespace kernels {

struct BoundScanStats {
  long long samples = 0;
  long long violations = 0;     // samples with at least one violated bound
  long long violated_terms = 0; // total violated coefficient indices
  double max_excess = 0.0;      // max over all coefficients of |a_n| - bound
  double max_magnitude = 0.0;
};

/// Random Herglotz measures -> Caratheodory series -> |c_n| <= 2 + slack.
BoundScanStats caratheodory_scan_seq(long long samples, int order, std::uint64_t seed,
                                     double slack);
BoundScanStats caratheodory_scan_omp(long long samples, int order, std::uint64_t seed,
                                     double slack);
BoundScanStats caratheodory_scan(long long samples, int order, std::uint64_t seed,
                                 double slack, Exec how);

/// Random Schur self-maps w -> U o w -> |a_n| <= 4n + slack.
BoundScanStats debranges_scan_seq(long long samples, int order, std::uint64_t seed,
                                  double slack);
BoundScanStats debranges_scan_omp(long long samples, int order, std::uint64_t seed,
                                  double slack);
BoundScanStats debranges_scan(long long samples, int order, std::uint64_t seed,
                              double slack, Exec how);

struct TriangleScanStats {
  long long samples = 0;
  double max_triangle_violation = 0.0;  // max of d(a,c) - d(a,b) - d(b,c)
  double max_symmetry_gap = 0.0;        // max |d(a,b) - d(b,a)|
};

/// Random sphere-point triples (10% at infinity) against the metric axioms.
TriangleScanStats spherical_triangle_scan_seq(long long samples, std::uint64_t seed);
TriangleScanStats spherical_triangle_scan_omp(long long samples, std::uint64_t seed);
TriangleScanStats spherical_triangle_scan(long long samples, std::uint64_t seed, Exec how);

/// Per-direction slice margins (Euclidean or spherical per codomain).
std::vector<double> slice_margins_seq(const SliceFunction& f, const Codomain& kind,
                                      double r, const std::vector<std::vector<cplx>>& dirs,
                                      PuncturedGap gap_mode);
std::vector<double> slice_margins_omp(const SliceFunction& f, const Codomain& kind,
                                      double r, const std::vector<std::vector<cplx>>& dirs,
                                      PuncturedGap gap_mode);
std::vector<double> slice_margins(const SliceFunction& f, const Codomain& kind, double r,
                                  const std::vector<std::vector<cplx>>& dirs,
                                  PuncturedGap gap_mode, Exec how);

}  // namespace kernels
}  // namespace bohrlab

#endif  // BOHRLAB_KERNELS_HPP
