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

#include "bohrlab/slices.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>

#include "bohrlab/kernels.hpp"
#include "bohrlab/rng.hpp"

namespace bohrlab {

namespace {

bool is_inf(double p) { return p == std::numeric_limits<double>::infinity(); }

}  // namespace

void BalancedBall::validate() const {
  if (n < 1) throw Error("BalancedBall: dimension must be >= 1");
  if (!(p >= 1.0)) throw Error("BalancedBall: p must be >= 1");
}

double p_norm(const Vec& x, double p) {
  if (is_inf(p)) {
    double m = 0.0;
    for (const cplx& v : x) m = std::max(m, std::abs(v));
    return m;
  }
  if (p == 1.0) {
    double s = 0.0;
    for (const cplx& v : x) s += std::abs(v);
    return s;
  }
  if (p == 2.0) {
    double s = 0.0;
    for (const cplx& v : x) s += std::norm(v);
    return std::sqrt(s);
  }
  double s = 0.0;
  for (const cplx& v : x) s += std::pow(std::abs(v), p);
  return std::pow(s, 1.0 / p);
}

cplx SupportFunctional::apply(const Vec& x) const {
  if (x.size() != coeffs.size()) throw Error("SupportFunctional: dimension mismatch");
  cplx acc{0.0, 0.0};
  for (std::size_t i = 0; i < x.size(); ++i) acc += coeffs[i] * x[i];
  return acc;
}

double SupportFunctional::dual_norm() const {
  if (ball.p == 1.0) return p_norm(coeffs, std::numeric_limits<double>::infinity());
  if (is_inf(ball.p)) return p_norm(coeffs, 1.0);
  return p_norm(coeffs, ball.p / (ball.p - 1.0));
}

SupportFunctional support_functional(const BalancedBall& ball, const Vec& v) {
  ball.validate();
  if (static_cast<int>(v.size()) != ball.n)
    throw Error("support_functional: dimension mismatch");
  const double norm = p_norm(v, ball.p);
  if (!(norm > 0.0)) throw ZeroVector("support_functional: v must be nonzero");

  SupportFunctional psi;
  psi.ball = ball;
  psi.anchor = v;
  psi.anchor_norm = norm;
  psi.coeffs.assign(v.size(), cplx{0.0, 0.0});

  if (is_inf(ball.p)) {
    // all mass on one maximal coordinate
    std::size_t j = 0;
    double best = -1.0;
    for (std::size_t i = 0; i < v.size(); ++i) {
      const double m = std::abs(v[i]);
      if (m > best) {
        best = m;
        j = i;
      }
    }
    psi.coeffs[j] = std::conj(v[j]) / std::abs(v[j]);
    return psi;
  }
  if (ball.p == 1.0) {
    for (std::size_t i = 0; i < v.size(); ++i) {
      const double m = std::abs(v[i]);
      if (m > 0.0) psi.coeffs[i] = std::conj(v[i]) / m;
    }
    return psi;
  }
  const double scale = std::pow(norm, ball.p - 1.0);
  for (std::size_t i = 0; i < v.size(); ++i) {
    const double m = std::abs(v[i]);
    if (m > 0.0) psi.coeffs[i] = std::conj(v[i]) * std::pow(m, ball.p - 2.0) / scale;
  }
  return psi;
}

std::vector<Vec> boundary_sample(const BalancedBall& ball, int count, std::uint64_t seed) {
  ball.validate();
  if (count < 1) throw Error("boundary_sample: count must be >= 1");
  std::vector<Vec> out(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) {
    SplitMix64 g(derive_seed(seed, static_cast<std::uint64_t>(i)));
    Vec v(static_cast<std::size_t>(ball.n));
    double norm = 0.0;
    do {
      for (cplx& z : v) z = g.next_complex_gaussian();
      norm = p_norm(v, ball.p);
    } while (!(norm > 0.0));
    for (cplx& z : v) z /= norm;
    out[static_cast<std::size_t>(i)] = std::move(v);
  }
  return out;
}

SliceFunction build_witness(const Codomain& kind, const BalancedBall& ball, const Vec& v,
                            double c, const WitnessParams& params, int order) {
  if (!(c > 0.0 && c < 1.0)) throw Error("build_witness: c must lie in (0, 1)");
  ExtremalFamily fam;
  switch (kind.kind) {
    case CodomainKind::HalfPlane:
    case CodomainKind::ConvexVia:
      fam = {Family::MoebiusL, 0.0, 1.0};
      break;
    case CodomainKind::Slit:
      fam = {Family::KoebeSquareU, 0.0, 1.0};
      break;
    case CodomainKind::PuncturedDisk:
      fam = {Family::SingularInnerH, params.t, 1.0};
      break;
    case CodomainKind::ExteriorDisk:
      fam = {Family::ExteriorW, 0.0, params.a0};
      break;
  }
  SliceFunction f;
  f.scalar_part = make_series(fam, order);
  f.functional = support_functional(ball, v);
  f.scale = c;
  return f;
}

TruncatedSeries slice_series(const SliceFunction& f, const Vec& y) {
  const double norm_y = p_norm(y, f.functional.ball.p);
  if (!(norm_y > 0.0)) throw ZeroVector("slice_series: y must be nonzero");
  if (norm_y > 1.0 + 1e-9) throw Error("slice_series: y must lie in the closed unit ball");
  const cplx w = f.scale * f.functional.apply(y) / f.functional.anchor_norm;

  const TruncatedSeries& h = f.scalar_part;
  std::vector<cplx> c(static_cast<std::size_t>(h.order()) + 1);
  cplx pw{1.0, 0.0};
  for (int m = 0; m <= h.order(); ++m) {
    c[static_cast<std::size_t>(m)] = h.coeff(m) * pw;
    pw *= w;
  }
  std::optional<TailBound> tail;
  if (h.tail())
    tail = TailBound{h.tail()->constant, h.tail()->rho * std::abs(w)};
  return TruncatedSeries(std::move(c), tail);
}

cplx slice_value(const SliceFunction& f, const Vec& x) {
  const cplx w = f.scale * f.functional.apply(x) / f.functional.anchor_norm;
  return eval(f.scalar_part, w);
}

BohrReport verify_multidim_bohr(const SliceFunction& f, const Codomain& kind, double r,
                                int samples, std::uint64_t seed, PuncturedGap gap_mode,
                                Exec how) {
  if (!(r >= 0.0 && r < 1.0))
    throw RadiusOutOfRange("verify_multidim_bohr: radius must lie in [0, 1)");
  if (samples < 0) throw Error("verify_multidim_bohr: samples must be >= 0");

  std::vector<Vec> dirs;
  dirs.reserve(static_cast<std::size_t>(samples) + 1);
  // Anchor first: |psi(y)| <= ||y|| makes y = v the provable worst case.
  dirs.push_back(f.functional.anchor);
  if (f.functional.anchor_norm != 1.0) {
    for (cplx& z : dirs[0]) z /= f.functional.anchor_norm;
  }
  if (samples > 0) {
    auto sampled = boundary_sample(f.functional.ball, samples, seed);
    for (auto& d : sampled) dirs.push_back(std::move(d));
  }

  const std::vector<double> margins = kernels::slice_margins(f, kind, r, dirs, gap_mode, how);

  BohrReport rep;
  rep.radius_lo = rep.radius_hi = r;
  rep.certified = f.scalar_part.tail().has_value();
  rep.margin_table.reserve(dirs.size());
  int argmin = 0;
  for (std::size_t i = 0; i < dirs.size(); ++i) {
    const double q =
        std::abs(f.functional.apply(dirs[i])) / f.functional.anchor_norm;
    rep.margin_table.push_back({q, margins[i]});
    if (margins[i] < margins[static_cast<std::size_t>(argmin)])
      argmin = static_cast<int>(i);
  }
  rep.worst_index = argmin;
  if (margins[static_cast<std::size_t>(argmin)] < 0.0) {
    const TruncatedSeries worst = slice_series(f, dirs[static_cast<std::size_t>(argmin)]);
    ViolationRecord v;
    v.params = {{"c", f.scale},
                {"q", rep.margin_table[static_cast<std::size_t>(argmin)].at}};
    v.r = r;
    if (kind.kind == CodomainKind::ExteriorDisk) {
      const double a0 = std::abs(worst.coeff(0));
      v.lhs = spherical_lambda(majorant_sum(worst, r, true).total(), a0);
      v.rhs = spherical_lambda(a0, 1.0);
    } else {
      v.lhs = majorant_sum(worst, r, false).total();
      v.rhs = boundary_gap(kind, worst.coeff(0), gap_mode);
    }
    rep.witness = std::move(v);
  }
  return rep;
}

}  // namespace bohrlab
