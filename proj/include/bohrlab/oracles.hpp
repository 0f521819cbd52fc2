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

#ifndef BOHRLAB_ORACLES_HPP
#define BOHRLAB_ORACLES_HPP

#include <cstdint>
#include <vector>

#include "bohrlab/series.hpp"

namespace bohrlab {

/// Discrete Herglotz measure: atoms (theta_j, w_j) with positive weights
/// summing to 1. Realizes Caratheodory functions in closed form,
/// p(z) = sum_j w_j (1 + e^{-i theta_j} z)/(1 - e^{-i theta_j} z).
struct HerglotzMeasure {
  struct Atom {
    double theta;   // in [0, 2pi)
    double weight;  // > 0
  };
  std::vector<Atom> atoms;

  /// Throws Error unless weights are positive and sum to 1 within 1e-12.
  void validate() const;
};

/// Schur parameters gamma_k with |gamma_k| <= 1; parameterizes analytic
/// self-maps of the disk fixing the origin via w(z) = z s(z).
struct SchurParams {
  std::vector<cplx> gammas;
  void validate() const;  // throws Error if any |gamma_k| > 1
};

/// Coefficient-bound violations found by a checker.
struct BoundViolation {
  int n;             // coefficient index
  double magnitude;  // |a_n|
  double bound;      // allowed value before slack
};

struct BoundReport {
  std::vector<BoundViolation> violations;
  double max_excess = 0.0;     // max over n of |a_n| - bound (can be negative)
  double max_magnitude = 0.0;  // max |a_n| over checked range
  bool ok() const { return violations.empty(); }
};

/// Caratheodory function of the measure, coefficients c_0 = 1,
/// c_n = 2 sum_j w_j e^{-i n theta_j}, with tail (2, 1).
TruncatedSeries caratheodory_from_measure(const HerglotzMeasure& mu, int order);

/// Checks |c_n| <= 2 + slack for n >= 1. Throws NotNormalized unless
/// |c_0 - 1| <= 1e-12. Slack defaults to 1e-12 (exact-form inputs); use
/// 1e-10 for composed/truncated inputs.
BoundReport caratheodory_bound_check(const TruncatedSeries& p, double slack = 1e-12);

/// w(z) = z s(z) with s built from the Schur recursion
/// s_k = (gamma_k + z s_{k+1})/(1 + conj(gamma_k) z s_{k+1}); maps the disk
/// into itself with w(0) = 0. Tail (1, 1) since |w| <= 1.
TruncatedSeries schur_self_map(const SchurParams& params, int order);

/// Pointwise value of the same self-map, exact up to rounding; the
/// independent route used by the Schwarz-lemma property tests (the truncated
/// series cannot resolve |w(z)| <= |z| near the boundary).
cplx schur_eval(const SchurParams& params, cplx z);

/// Checks the subordination coefficient bound |a_n| <= n * b1_abs + slack
/// for n >= 1 (de Branges). Slack defaults to 1e-10.
BoundReport debranges_check(const TruncatedSeries& f, double b1_abs, double slack = 1e-10);

/// Seeded random measure: 1..max_atoms atoms, Dirichlet(1) weights, uniform
/// phases. Deterministic given the seed.
HerglotzMeasure random_herglotz(std::uint64_t seed, int max_atoms = 16);

/// Seeded random Schur parameters: 1..max_params values uniform in the
/// closed unit disk.
SchurParams random_schur(std::uint64_t seed, int max_params = 8);

}  // namespace bohrlab

#endif  // BOHRLAB_ORACLES_HPP
