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

#include "bohrlab/atlas.hpp"

#include <cmath>
#include <cstddef>

namespace bohrlab {

namespace {

// Minimal double-double arithmetic (Dekker/Knuth error-free transforms).
// Only what the compensated binomial sum needs.
struct DD {
  double hi = 0.0;
  double lo = 0.0;
};

DD two_sum(double a, double b) {
  const double s = a + b;
  const double bb = s - a;
  return {s, (a - (s - bb)) + (b - bb)};
}

DD two_prod(double a, double b) {
  const double p = a * b;
  return {p, std::fma(a, b, -p)};
}

DD dd_add(DD a, DD b) {
  DD s = two_sum(a.hi, b.hi);
  const double lo = a.lo + b.lo + s.lo;
  return two_sum(s.hi, lo);
}

DD dd_mul_d(DD a, double b) {
  DD p = two_prod(a.hi, b);
  p.lo += a.lo * b;
  return two_sum(p.hi, p.lo);
}

DD dd_div_d(DD a, double b) {
  const double q = a.hi / b;
  const DD p = two_prod(q, b);
  const double r = ((a.hi - p.hi) - p.lo + a.lo) / b;
  return two_sum(q, r);
}

}  // namespace

TruncatedSeries moebius_l_series(int order) {
  if (order < 0) throw Error("moebius_l_series: order must be >= 0");
  std::vector<cplx> c(static_cast<std::size_t>(order) + 1, cplx{2.0, 0.0});
  c[0] = cplx{1.0, 0.0};
  return TruncatedSeries(std::move(c), TailBound{2.0, 1.0});
}

TruncatedSeries koebe_square_series(int order, double a0) {
  if (order < 0) throw Error("koebe_square_series: order must be >= 0");
  if (!(a0 > 0.0)) throw Error("koebe_square_series: a0 must be positive");
  std::vector<cplx> c(static_cast<std::size_t>(order) + 1);
  c[0] = cplx{a0, 0.0};
  for (int n = 1; n <= order; ++n)
    c[static_cast<std::size_t>(n)] = cplx{4.0 * a0 * n, 0.0};
  return TruncatedSeries(std::move(c), std::nullopt);
}

TruncatedSeries h_t_series(double t, int order) {
  if (!(t > 0.0)) throw Error("h_t_series: t must be positive");
  if (order < 0) throw Error("h_t_series: order must be >= 0");
  const double front = std::exp(-t);
  std::vector<cplx> c(static_cast<std::size_t>(order) + 1);
  c[0] = cplx{front, 0.0};
  for (int n = 1; n <= order; ++n) {
    // term_m = (-2t)^m/m! * C(n-1, m-1); ratio to the previous term is
    // (-2t)(n-m+1)/(m(m-1)).
    DD term{-2.0 * t, 0.0};
    DD sum = term;
    for (int m = 2; m <= n; ++m) {
      term = dd_mul_d(term, -2.0 * t);
      term = dd_mul_d(term, static_cast<double>(n - m + 1));
      term = dd_div_d(term, static_cast<double>(m) * static_cast<double>(m - 1));
      sum = dd_add(sum, term);
    }
    c[static_cast<std::size_t>(n)] = cplx{front * (sum.hi + sum.lo), 0.0};
  }
  return TruncatedSeries(std::move(c), TailBound{1.0, 1.0});
}

TruncatedSeries exterior_w_series(double a0_modulus, int order) {
  if (!(a0_modulus > 1.0)) throw Error("exterior_w_series: a0 must exceed 1");
  if (order < 0) throw Error("exterior_w_series: order must be >= 0");
  const double s = std::log(a0_modulus * a0_modulus);
  // s z/(1-z) = s(z + z^2 + ...)
  std::vector<cplx> inner(static_cast<std::size_t>(order) + 1, cplx{s, 0.0});
  inner[0] = cplx{0.0, 0.0};
  TruncatedSeries e = exp(TruncatedSeries(std::move(inner)));
  return scale(e, cplx{a0_modulus, 0.0});
}

TruncatedSeries disk_automorphism(cplx b, int order) {
  if (order < 0) throw Error("disk_automorphism: order must be >= 0");
  const double babs = std::abs(b);
  if (!(babs < 1.0))
    throw ParameterOutOfDisk("disk_automorphism: parameter must satisfy |b| < 1");
  std::vector<cplx> c(static_cast<std::size_t>(order) + 1);
  c[0] = b;
  const double head = 1.0 - babs * babs;
  cplx pw{1.0, 0.0};  // (-conj b)^{n-1}
  for (int n = 1; n <= order; ++n) {
    c[static_cast<std::size_t>(n)] = head * pw;
    pw *= -std::conj(b);
  }
  TailBound tail = (babs == 0.0) ? TailBound{0.0, 0.0} : TailBound{head / babs, babs};
  return TruncatedSeries(std::move(c), tail);
}

TruncatedSeries convex_to_halfplane(const TruncatedSeries& f, cplx u, double t) {
  const cplx rot = std::polar(1.0, t);
  std::vector<cplx> c(f.coeffs());
  c[0] = (c[0] - u) * rot;
  for (std::size_t n = 1; n < c.size(); ++n) c[n] *= rot;
  std::optional<TailBound> tail = f.tail();  // |rot| = 1 preserves the bound
  return TruncatedSeries(std::move(c), tail);
}

TruncatedSeries make_series(const ExtremalFamily& fam, int order) {
  switch (fam.family) {
    case Family::MoebiusL:
      return moebius_l_series(order);
    case Family::KoebeSquareU:
      return koebe_square_series(order, fam.a0);
    case Family::SingularInnerH:
      return h_t_series(fam.t, order);
    case Family::ExteriorW:
      return exterior_w_series(fam.a0, order);
  }
  throw Error("make_series: unknown family");
}

}  // namespace bohrlab
