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

#ifndef BOHRLAB_SLICES_HPP
#define BOHRLAB_SLICES_HPP

#include <cstdint>
#include <vector>

#include "bohrlab/engine.hpp"
#include "bohrlab/kernels.hpp"

namespace bohrlab {

using Vec = std::vector<cplx>;

/// Unit ball of the l^p norm on C^n; a balanced domain. p may be
/// std::numeric_limits<double>::infinity().
struct BalancedBall {
  int n = 1;
  double p = 2.0;
  void validate() const;  // throws Error unless n >= 1 and p >= 1
};

double p_norm(const Vec& x, double p);

/// Norm-one functional with psi(v) = ||v||_p; realizes the supporting
/// hyperplane at v. For p = 1 and p = infinity the discrete selections are
/// used, ties broken at the lowest index.
struct SupportFunctional {
  BalancedBall ball;
  Vec coeffs;
  Vec anchor;
  double anchor_norm = 0.0;

  cplx apply(const Vec& x) const;
  double dual_norm() const;  // ||psi||_q, 1/p + 1/q = 1
};

/// Throws ZeroVector if v = 0.
SupportFunctional support_functional(const BalancedBall& ball, const Vec& v);

/// `count` unit-norm directions: normalized complex Gaussians, deterministic
/// per seed (sample i depends only on derive_seed(seed, i)).
std::vector<Vec> boundary_sample(const BalancedBall& ball, int count, std::uint64_t seed);

/// x  |->  h(c psi_v(x)/||v||): a witness that factors through one linear
/// functional. Its slice along any direction is the scalar series with the
/// inner factor scaled by c psi_v(y)/||v||.
struct SliceFunction {
  TruncatedSeries scalar_part;
  SupportFunctional functional;
  double scale = 0.0;  // c in (0, 1)
};

struct WitnessParams {
  double t = 0.01;    // punctured-disk family
  double a0 = 1.001;  // exterior family
};

/// The codomain's extremal family precomposed with c psi_v/||v||:
/// half-plane/convex -> L, slit -> U, punctured -> H_t, exterior -> W.
SliceFunction build_witness(const Codomain& kind, const BalancedBall& ball,
                            const Vec& v, double c, const WitnessParams& params = {},
                            int order = kDefaultOrder);

/// Coefficients a_m (c psi_v(y)/||v||)^m of z |-> f(zy); exact because f
/// factors through one functional. Throws ZeroVector on y = 0 and Error when
/// y lies outside the closed unit ball. Tail scales as (C, rho |w|).
TruncatedSeries slice_series(const SliceFunction& f, const Vec& y);

/// f evaluated at the point x (through the scalar part).
cplx slice_value(const SliceFunction& f, const Vec& x);

/// Margins of f's slices at radius r over `samples` random boundary
/// directions plus the anchor v (always index 0, the provable worst case).
/// ExteriorDisk slices use the spherical margin, everything else the
/// Euclidean one. The report's margin_table holds (|psi(y)|/||v||, margin)
/// per direction; radius_lo/hi echo r; the witness records the worst
/// violation when the minimum margin is negative.
BohrReport verify_multidim_bohr(const SliceFunction& f, const Codomain& kind, double r,
                                int samples, std::uint64_t seed,
                                PuncturedGap gap_mode = PuncturedGap::EuclideanDistance,
                                Exec how = Exec::OpenMP);

}  // namespace bohrlab

#endif  // BOHRLAB_SLICES_HPP
