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

#include "bohrlab/engine.hpp"

#include <algorithm>
#include <cmath>

namespace bohrlab {

namespace {

constexpr double kScanLimit = 1.0 - 1e-9;
constexpr int kMaxBisection = 80;

double punctured_gap_value(double a0_abs, PuncturedGap mode) {
  if (mode == PuncturedGap::PaperThreshold) return 1.0;
  return std::min(a0_abs, 1.0 - a0_abs);
}

void record_violation(BohrReport& rep, ViolationRecord v) {
  if (!rep.witness || v.lhs - v.rhs > rep.witness->lhs - rep.witness->rhs)
    rep.witness = v;
  rep.violations.push_back(std::move(v));
}

}  // namespace

double spherical_lambda(const SpherePoint& a, const SpherePoint& b) {
  if (a.infinite && b.infinite) return 0.0;
  if (a.infinite || b.infinite) {
    const cplx z = a.infinite ? b.value : a.value;
    return 1.0 / std::sqrt(1.0 + std::norm(z));
  }
  return std::abs(a.value - b.value) /
         (std::sqrt(1.0 + std::norm(a.value)) * std::sqrt(1.0 + std::norm(b.value)));
}

double boundary_gap(const Codomain& kind, cplx a0, PuncturedGap gap_mode) {
  switch (kind.kind) {
    case CodomainKind::HalfPlane:
      if (!(a0.real() > 0.0))
        throw OutsideCodomain("boundary_gap: half-plane needs Re a0 > 0");
      return a0.real();
    case CodomainKind::Slit:
      // f(0) > 0 is the hypothesis; a complex constant term is rejected,
      // not rotated.
      if (std::abs(a0.imag()) > 1e-12)
        throw OutsideCodomain("boundary_gap: slit needs real a0");
      if (!(a0.real() > 0.0))
        throw OutsideCodomain("boundary_gap: slit needs a0 > 0");
      return a0.real();
    case CodomainKind::PuncturedDisk: {
      const double mag = std::abs(a0);
      if (!(mag > 0.0 && mag < 1.0))
        throw OutsideCodomain("boundary_gap: punctured disk needs 0 < |a0| < 1");
      return punctured_gap_value(mag, gap_mode);
    }
    case CodomainKind::ExteriorDisk:
      throw OutsideCodomain(
          "boundary_gap: exterior disk uses the spherical inequality; "
          "call spherical_margin");
    case CodomainKind::ConvexVia:
      return std::abs(a0 - kind.u);
  }
  throw Error("boundary_gap: unknown codomain");
}

double euclidean_margin(const TruncatedSeries& f, const Codomain& kind, double r,
                        PuncturedGap gap_mode) {
  if (kind.kind == CodomainKind::ExteriorDisk)
    throw OutsideCodomain("euclidean_margin: exterior disk uses spherical_margin");
  const double gap = boundary_gap(kind, f.coeff(0), gap_mode);
  const MajorantSum ms = majorant_sum(f, r, /*include_constant=*/false);
  return gap - ms.total();
}

double spherical_margin(const TruncatedSeries& f, double r, SphericalSumForm form) {
  const double a0 = std::abs(f.coeff(0));
  if (!(a0 > 1.0)) throw OutsideCodomain("spherical_margin: needs |a0| > 1");
  const MajorantSum ms =
      majorant_sum(f, r, form == SphericalSumForm::FromConstant);
  return spherical_lambda(a0, 1.0) - spherical_lambda(ms.total(), a0);
}

std::function<double(double)> worst_case_margin(const Codomain& kind) {
  if (kind.kind == CodomainKind::Slit)
    return [](double r) { return 1.0 - 4.0 * r / ((1.0 - r) * (1.0 - r)); };
  // Half-plane and convex by the Caratheodory bound; punctured as the t->0
  // quotient limit; exterior as the a0->1 spherical ratio limit. All reduce
  // to the same normalized margin.
  return [](double r) { return 1.0 - 2.0 * r / (1.0 - r); };
}

BohrReport solve_radius(const std::function<double(double)>& margin, double tol,
                        bool certified) {
  if (!(tol > 0.0)) throw Error("solve_radius: tol must be positive");
  BohrReport rep;
  rep.certified = certified;
  for (int i = 0; i <= 10; ++i) {
    const double r = 0.05 * i;
    rep.margin_table.push_back({r, margin(r)});
  }

  double lo = 0.0;
  double m_lo = margin(lo);
  if (m_lo < 0.0) throw NoBracket("solve_radius: margin already negative at r = 0");
  double hi = kScanLimit;
  double m_hi = margin(hi);
  if (m_hi >= 0.0) {
    // No crossing up to the scan limit: the inequality holds on the whole
    // range we can verify.
    rep.radius_lo = rep.radius_hi = hi;
    return rep;
  }
  int it = 0;
  while (hi - lo > tol && it < kMaxBisection) {
    const double mid = 0.5 * (lo + hi);
    if (margin(mid) >= 0.0)
      lo = mid;
    else
      hi = mid;
    ++it;
  }
  rep.radius_lo = lo;
  rep.radius_hi = hi;
  rep.iterations = it;
  return rep;
}

BohrReport solve_radius(const Codomain& kind, double tol) {
  return solve_radius(worst_case_margin(kind), tol, /*certified=*/true);
}

BohrReport solve_radius(const TruncatedSeries& f, const Codomain& kind, double tol,
                        PuncturedGap gap_mode) {
  auto margin = [&f, kind, gap_mode](double r) {
    return euclidean_margin(f, kind, r, gap_mode);
  };
  return solve_radius(margin, tol, f.tail().has_value());
}

double ratio_limit_value(double c, double r0) {
  const double x = c * r0;
  if (!(x > 0.0 && x < 1.0)) throw Error("ratio_limit_value: need c*r0 in (0, 1)");
  return 2.0 * x / (1.0 - x);
}

std::vector<std::pair<double, double>> ratio_limit(double c, double r0,
                                                   std::span<const double> a0_grid) {
  const double x = c * r0;
  if (!(x > 0.0 && x < 1.0)) throw Error("ratio_limit: need c*r0 in (0, 1)");
  std::vector<std::pair<double, double>> rows;
  rows.reserve(a0_grid.size());
  for (double a0 : a0_grid) {
    if (!(a0 > 1.0)) throw Error("ratio_limit: a0 grid must exceed 1");
    const double num = std::sqrt(2.0) * a0 * (std::pow(a0, 2.0 * x / (1.0 - x)) - 1.0);
    const double den =
        (a0 - 1.0) * std::sqrt(1.0 + std::pow(a0, 2.0 * (1.0 + x) / (1.0 - x)));
    rows.emplace_back(a0, num / den);
  }
  return rows;
}

BohrReport sharpness_scan(const Codomain& kind, double r0, const SharpnessGrids& grids) {
  if (!(r0 > 0.0 && r0 < 1.0)) throw Error("sharpness_scan: r0 must lie in (0, 1)");
  BohrReport rep;
  rep.radius_lo = rep.radius_hi = r0;
  rep.certified = true;

  switch (kind.kind) {
    case CodomainKind::HalfPlane:
    case CodomainKind::ConvexVia:
    case CodomainKind::Slit: {
      const bool slit = kind.kind == CodomainKind::Slit;
      for (double c : grids.c_grid) {
        const double x = c * r0;
        double lhs = (1.0 + x) / (1.0 - x);
        if (slit) lhs *= lhs;
        const double rhs = 2.0;  // f(0) + gap with both equal to 1
        rep.margin_table.push_back({c, rhs - lhs});
        if (lhs > rhs)
          record_violation(rep, {{{"c", c}}, r0, lhs, rhs});
      }
      break;
    }
    case CodomainKind::PuncturedDisk: {
      // Witness majorant against the Euclidean gap of a0 = e^{-t}; under the
      // threshold-1 reading no violation exists at these radii.
      for (double t : grids.t_grid) {
        const TruncatedSeries h = h_t_series(t, grids.order);
        const double gap = std::min(std::exp(-t), 1.0 - std::exp(-t));
        for (double c : grids.c_grid) {
          const double x = c * r0;
          double lhs = 0.0;
          for (int m = h.order(); m >= 1; --m) lhs = lhs * x + std::abs(h.coeff(m));
          lhs *= x;
          rep.margin_table.push_back({c, gap - lhs});
          if (lhs > gap)
            record_violation(rep, {{{"c", c}, {"t", t}}, r0, lhs, gap});
        }
      }
      break;
    }
    case CodomainKind::ExteriorDisk: {
      for (double a0 : grids.a0_grid) {
        if (!(a0 > 1.0)) throw Error("sharpness_scan: a0 grid must exceed 1");
        const double rhs = spherical_lambda(a0, 1.0);
        for (double c : grids.c_grid) {
          const double x = c * r0;
          const double value = std::pow(a0, (1.0 + x) / (1.0 - x));
          const double lhs = spherical_lambda(value, a0);
          rep.margin_table.push_back({c, rhs - lhs});
          if (lhs > rhs)
            record_violation(rep, {{{"c", c}, {"a0", a0}}, r0, lhs, rhs});
        }
      }
      break;
    }
  }

  if (rep.violations.empty())
    throw NoViolationFound("sharpness_scan: no violation on the grid");
  return rep;
}

}  // namespace bohrlab
