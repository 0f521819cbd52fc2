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

#ifndef BOHRLAB_ATLAS_HPP
#define BOHRLAB_ATLAS_HPP

#include "bohrlab/series.hpp"

namespace bohrlab {

/// Default truncation order. Geometric tails at r <= 1/3 are far below 1e-30
/// for every generator here, so 200 leaves ample certification slack.
inline constexpr int kDefaultOrder = 200;

enum class Family {
  MoebiusL,       // L(z) = (1+z)/(1-z), disk -> right half-plane
  KoebeSquareU,   // U(z) = ((1+z)/(1-z))^2, disk -> slit plane
  SingularInnerH, // H_t(z) = exp(-t(1+z)/(1-z)), disk -> punctured disk
  ExteriorW,      // W(z) = a0 exp(log(a0^2) z/(1-z)), disk -> exterior disk
};

/// Parameterized witness generator: `t` applies to SingularInnerH (t > 0),
/// `a0` to ExteriorW (a0 > 1) and to the KoebeSquareU prefactor (a0 > 0).
struct ExtremalFamily {
  Family family = Family::MoebiusL;
  double t = 1.0;
  double a0 = 1.0;
};

/// L(z) = (1+z)/(1-z): coefficients [1, 2, 2, ...] with tail (2, 1).
TruncatedSeries moebius_l_series(int order);

/// a0 ((1+z)/(1-z))^2: coefficients [a0, 4 a0, 8 a0, ..., 4 a0 n, ...].
/// Carries no tail: 4 a0 n admits no geometric bound with ratio <= 1.
TruncatedSeries koebe_square_series(int order, double a0);

/// H_t(z) = exp(-t(1+z)/(1-z)) by the explicit binomial sum
///   a_n = e^{-t} sum_{m=1..n} (-2t)^m/m! C(n-1, m-1),  a_0 = e^{-t},
/// evaluated in compensated (double-double) arithmetic: the terms grow like
/// exp(2 sqrt(2tn)) and cancel down to |a_n| <= 1, which plain doubles cannot
/// survive past t*n of a few dozen. Tail (1, 1): |H_t| < 1 on the disk.
TruncatedSeries h_t_series(double t, int order);

/// W(z) = a0 exp(s z/(1-z)) with s = log(a0^2), a0 > 1, built from the
/// series exponential. No tail (coefficients grow like exp(2 sqrt(sn))).
TruncatedSeries exterior_w_series(double a0_modulus, int order);

/// Disk automorphism (z + b)/(1 + conj(b) z), |b| < 1:
/// a_0 = b, a_n = (1-|b|^2)(-conj(b))^{n-1}. Tail ((1-|b|^2)/|b|, |b|).
/// Throws ParameterOutOfDisk if |b| >= 1.
TruncatedSeries disk_automorphism(cplx b, int order);

/// g(z) = (f(z) - u) e^{it}: shifts the constant term and rotates, leaving
/// every |g_n| = |f_n| for n >= 1 (the Bohr sum is unchanged).
TruncatedSeries convex_to_halfplane(const TruncatedSeries& f, cplx u, double t);

/// Dispatch on the family tag; validates the parameter domain.
TruncatedSeries make_series(const ExtremalFamily& fam, int order = kDefaultOrder);

}  // namespace bohrlab

#endif  // BOHRLAB_ATLAS_HPP
