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

#include "bohrlab/oracles.hpp"

#include <cmath>
#include <cstddef>

#include "bohrlab/rng.hpp"

namespace bohrlab {

namespace {

constexpr double kTwoPi = 6.283185307179586476925287;

// 1/(1 + u) for a polynomial u with u(0) = 0, to the order of u:
// r_0 = 1, r_n = -sum_{k=1..n} u_k r_{n-k}. Internal to the Schur recursion;
// not a public series operation.
std::vector<cplx> reciprocal_one_plus(const std::vector<cplx>& u) {
  std::vector<cplx> r(u.size());
  r[0] = cplx{1.0, 0.0};
  for (std::size_t n = 1; n < u.size(); ++n) {
    cplx acc{0.0, 0.0};
    for (std::size_t k = 1; k <= n; ++k) acc += u[k] * r[n - k];
    r[n] = -acc;
  }
  return r;
}

std::vector<cplx> poly_mul_to(const std::vector<cplx>& a, const std::vector<cplx>& b,
                              std::size_t order) {
  std::vector<cplx> out(order + 1, cplx{0.0, 0.0});
  for (std::size_t i = 0; i < a.size() && i <= order; ++i) {
    if (a[i] == cplx{0.0, 0.0}) continue;
    for (std::size_t j = 0; j < b.size() && i + j <= order; ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

}  // namespace

void HerglotzMeasure::validate() const {
  if (atoms.empty()) throw Error("HerglotzMeasure: needs at least one atom");
  double total = 0.0;
  for (const Atom& a : atoms) {
    if (!(a.weight > 0.0)) throw Error("HerglotzMeasure: weights must be positive");
    total += a.weight;
  }
  if (std::abs(total - 1.0) > 1e-12)
    throw Error("HerglotzMeasure: weights must sum to 1");
}

void SchurParams::validate() const {
  for (const cplx& g : gammas) {
    if (std::abs(g) > 1.0 + 1e-15) throw Error("SchurParams: |gamma| must be <= 1");
  }
}

TruncatedSeries caratheodory_from_measure(const HerglotzMeasure& mu, int order) {
  mu.validate();
  if (order < 0) throw Error("caratheodory_from_measure: order must be >= 0");
  std::vector<cplx> c(static_cast<std::size_t>(order) + 1, cplx{0.0, 0.0});
  c[0] = cplx{1.0, 0.0};
  for (const auto& atom : mu.atoms) {
    // e^{-i n theta} by repeated multiplication: cheaper than polar per n and
    // exact enough (error ~ n eps, checked against the 2 + 1e-12 slack).
    const cplx step = std::polar(1.0, -atom.theta);
    cplx ph = step;
    for (int n = 1; n <= order; ++n) {
      c[static_cast<std::size_t>(n)] += 2.0 * atom.weight * ph;
      ph *= step;
    }
  }
  return TruncatedSeries(std::move(c), TailBound{2.0, 1.0});
}

BoundReport caratheodory_bound_check(const TruncatedSeries& p, double slack) {
  if (std::abs(p.coeff(0) - cplx{1.0, 0.0}) > 1e-12)
    throw NotNormalized("caratheodory_bound_check: constant term must be 1");
  BoundReport rep;
  rep.max_excess = -2.0;
  for (int n = 1; n <= p.order(); ++n) {
    const double mag = std::abs(p.coeff(n));
    rep.max_magnitude = std::max(rep.max_magnitude, mag);
    rep.max_excess = std::max(rep.max_excess, mag - 2.0);
    if (mag > 2.0 + slack) rep.violations.push_back({n, mag, 2.0});
  }
  return rep;
}

TruncatedSeries schur_self_map(const SchurParams& params, int order) {
  params.validate();
  if (order < 1) throw Error("schur_self_map: order must be >= 1");
  const std::size_t n = static_cast<std::size_t>(order);

  // s = gamma_K at the bottom, then
  // s_k = (gamma_k + z s_{k+1}) / (1 + conj(gamma_k) z s_{k+1}).
  std::vector<cplx> s(n + 1, cplx{0.0, 0.0});
  if (params.gammas.empty()) {
    // no parameters: s == 0, w == 0
  } else {
    s[0] = params.gammas.back();
    for (std::size_t idx = params.gammas.size() - 1; idx-- > 0;) {
      const cplx g = params.gammas[idx];
      std::vector<cplx> zs(n + 1, cplx{0.0, 0.0});
      for (std::size_t k = 1; k <= n; ++k) zs[k] = s[k - 1];
      std::vector<cplx> num = zs;
      num[0] += g;
      std::vector<cplx> den = zs;
      for (cplx& v : den) v *= std::conj(g);
      // den = 1 + conj(g) z s, constant term exactly 1
      den[0] = cplx{0.0, 0.0};
      s = poly_mul_to(num, reciprocal_one_plus(den), n);
    }
  }
  std::vector<cplx> w(n + 1, cplx{0.0, 0.0});
  for (std::size_t k = 1; k <= n; ++k) w[k] = s[k - 1];
  return TruncatedSeries(std::move(w), TailBound{1.0, 1.0});
}

cplx schur_eval(const SchurParams& params, cplx z) {
  params.validate();
  if (params.gammas.empty()) return {0.0, 0.0};
  cplx s = params.gammas.back();
  for (std::size_t idx = params.gammas.size() - 1; idx-- > 0;) {
    const cplx g = params.gammas[idx];
    s = (g + z * s) / (1.0 + std::conj(g) * z * s);
  }
  return z * s;
}

BoundReport debranges_check(const TruncatedSeries& f, double b1_abs, double slack) {
  if (!(b1_abs > 0.0)) throw Error("debranges_check: b1_abs must be positive");
  BoundReport rep;
  rep.max_excess = -b1_abs;
  for (int n = 1; n <= f.order(); ++n) {
    const double mag = std::abs(f.coeff(n));
    const double bound = b1_abs * n;
    rep.max_magnitude = std::max(rep.max_magnitude, mag);
    rep.max_excess = std::max(rep.max_excess, mag - bound);
    if (mag > bound + slack) rep.violations.push_back({n, mag, bound});
  }
  return rep;
}

HerglotzMeasure random_herglotz(std::uint64_t seed, int max_atoms) {
  SplitMix64 g(seed);
  const int k = 1 + static_cast<int>(g.next_u64() % static_cast<std::uint64_t>(max_atoms));
  HerglotzMeasure mu;
  mu.atoms.reserve(static_cast<std::size_t>(k));
  double total = 0.0;
  for (int j = 0; j < k; ++j) {
    const double theta = g.next_range(0.0, kTwoPi);
    const double w = -std::log(g.next_unit());  // Exp(1) => Dirichlet(1,...,1)
    mu.atoms.push_back({theta, w});
    total += w;
  }
  for (auto& a : mu.atoms) a.weight /= total;
  // Renormalize the largest weight so the sum is 1 to the last bit.
  double s = 0.0;
  std::size_t imax = 0;
  for (std::size_t j = 0; j < mu.atoms.size(); ++j) {
    s += mu.atoms[j].weight;
    if (mu.atoms[j].weight > mu.atoms[imax].weight) imax = j;
  }
  mu.atoms[imax].weight += 1.0 - s;
  return mu;
}

SchurParams random_schur(std::uint64_t seed, int max_params) {
  SplitMix64 g(seed);
  const int k = 1 + static_cast<int>(g.next_u64() % static_cast<std::uint64_t>(max_params));
  SchurParams p;
  p.gammas.reserve(static_cast<std::size_t>(k));
  for (int j = 0; j < k; ++j) p.gammas.push_back(g.next_in_disk());
  return p;
}

}  // namespace bohrlab
