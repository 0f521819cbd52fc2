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

#include "bohrlab/series.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>

namespace bohrlab {

namespace {

bool finite(cplx z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

// Cauchy product of the stored polynomials, zero-extended, to a fixed order.
// Used by compose(), where zero extension is exact.
std::vector<cplx> mul_to_order(const std::vector<cplx>& a, const std::vector<cplx>& b,
                               int order) {
  std::vector<cplx> out(static_cast<std::size_t>(order) + 1, cplx{0.0, 0.0});
  const int na = static_cast<int>(a.size()) - 1;
  const int nb = static_cast<int>(b.size()) - 1;
  for (int i = 0; i <= std::min(na, order); ++i) {
    if (a[static_cast<std::size_t>(i)] == cplx{0.0, 0.0}) continue;
    const int jmax = std::min(nb, order - i);
    for (int j = 0; j <= jmax; ++j) {
      out[static_cast<std::size_t>(i + j)] +=
          a[static_cast<std::size_t>(i)] * b[static_cast<std::size_t>(j)];
    }
  }
  return out;
}

// sum_{k in (n_out, coeffs.order]} contribution of stored coefficients that a
// tail with ratio rho must absorb: max |a_k| rho^{-k}. Returns nullopt when no
// finite constant exists (rho == 0 with a nonzero overhang coefficient).
std::optional<double> overhang_constant(const std::vector<cplx>& coeffs, int n_out,
                                        double rho) {
  double c = 0.0;
  for (std::size_t k = static_cast<std::size_t>(n_out) + 1; k < coeffs.size(); ++k) {
    const double mag = std::abs(coeffs[k]);
    if (mag == 0.0) continue;
    if (rho == 0.0) return std::nullopt;
    c = std::max(c, mag * std::pow(rho, -static_cast<double>(k)));
  }
  return c;
}

// sum_k |a_k| rho^{-k} over stored coefficients; weights the cross terms of a
// product so they fit under a geometric envelope with ratio rho.
std::optional<double> weighted_coeff_sum(const std::vector<cplx>& coeffs, double rho) {
  double s = 0.0;
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    const double mag = std::abs(coeffs[k]);
    if (mag == 0.0) continue;
    if (rho == 0.0 && k > 0) return std::nullopt;
    s += mag * (k == 0 ? 1.0 : std::pow(rho, -static_cast<double>(k)));
  }
  return s;
}

}  // namespace

TruncatedSeries::TruncatedSeries(std::vector<cplx> coeffs, std::optional<TailBound> tail)
    : coeffs_(std::move(coeffs)), tail_(tail) {
  if (coeffs_.empty()) throw Error("TruncatedSeries: needs at least the constant term");
  for (const cplx& c : coeffs_) {
    if (!finite(c)) throw Error("TruncatedSeries: non-finite coefficient");
  }
  if (tail_) {
    if (!(tail_->constant >= 0.0) || !std::isfinite(tail_->constant))
      throw Error("TruncatedSeries: tail constant must be finite and nonnegative");
    if (!(tail_->rho >= 0.0 && tail_->rho <= 1.0))
      throw Error("TruncatedSeries: tail rho must lie in [0, 1]");
  }
}

TruncatedSeries TruncatedSeries::truncated(int new_order) const {
  if (new_order < 0) throw Error("truncated: order must be >= 0");
  if (new_order >= order()) return *this;
  std::vector<cplx> c(coeffs_.begin(), coeffs_.begin() + new_order + 1);
  return TruncatedSeries(std::move(c), std::nullopt);
}

TruncatedSeries identity_series(int order) {
  if (order < 1) throw Error("identity_series: order must be >= 1");
  std::vector<cplx> c(static_cast<std::size_t>(order) + 1, cplx{0.0, 0.0});
  c[1] = cplx{1.0, 0.0};
  return TruncatedSeries(std::move(c), TailBound{0.0, 0.0});
}

TruncatedSeries constant_series(cplx value) {
  return TruncatedSeries({value}, TailBound{0.0, 0.0});
}

TruncatedSeries add(const TruncatedSeries& f, const TruncatedSeries& g) {
  const int n = std::min(f.order(), g.order());
  std::vector<cplx> out(static_cast<std::size_t>(n) + 1);
  for (int k = 0; k <= n; ++k) out[static_cast<std::size_t>(k)] = f.coeff(k) + g.coeff(k);

  std::optional<TailBound> tail;
  if (f.tail() && g.tail()) {
    const double rho = std::max(f.tail()->rho, g.tail()->rho);
    const auto of = overhang_constant(f.coeffs(), n, rho);
    const auto og = overhang_constant(g.coeffs(), n, rho);
    if (of && og) {
      tail = TailBound{f.tail()->constant + g.tail()->constant + *of + *og, rho};
    }
  }
  return TruncatedSeries(std::move(out), tail);
}

TruncatedSeries scale(const TruncatedSeries& f, cplx factor) {
  if (!std::isfinite(factor.real()) || !std::isfinite(factor.imag()))
    throw Error("scale: non-finite factor");
  std::vector<cplx> out(f.coeffs());
  for (cplx& c : out) c *= factor;
  std::optional<TailBound> tail;
  if (f.tail()) tail = TailBound{f.tail()->constant * std::abs(factor), f.tail()->rho};
  return TruncatedSeries(std::move(out), tail);
}

TruncatedSeries mul(const TruncatedSeries& f, const TruncatedSeries& g) {
  const int n = std::min(f.order(), g.order());
  std::vector<cplx> out(static_cast<std::size_t>(n) + 1, cplx{0.0, 0.0});
  for (int i = 0; i <= n; ++i) {
    const cplx a = f.coeff(i);
    if (a == cplx{0.0, 0.0}) continue;
    for (int j = 0; i + j <= n; ++j) out[static_cast<std::size_t>(i + j)] += a * g.coeff(j);
  }

  // Tail for n > min(N_f, N_g): split the convolution into stored*stored,
  // stored*tail, tail*stored, tail*tail. The first three fit under
  // rho' = max(rho_f, rho_g) with rho'-weighted coefficient sums; the last
  // needs rho_f != rho_g (or a zero constant) to avoid n*rho^n growth.
  std::optional<TailBound> tail;
  if (f.tail() && g.tail()) {
    const TailBound tf = *f.tail();
    const TailBound tg = *g.tail();
    const double rho = std::max(tf.rho, tg.rho);
    const auto sf = weighted_coeff_sum(f.coeffs(), rho);
    const auto sg = weighted_coeff_sum(g.coeffs(), rho);
    const bool cross_ok =
        tf.constant == 0.0 || tg.constant == 0.0 || tf.rho != tg.rho;
    if (sf && sg && cross_ok) {
      double c = *sf * *sg + tf.constant * *sg + tg.constant * *sf;
      if (tf.constant > 0.0 && tg.constant > 0.0) {
        const double ratio = std::min(tf.rho, tg.rho) / rho;
        c += tf.constant * tg.constant / (1.0 - ratio);
      }
      if (std::isfinite(c)) tail = TailBound{c, rho};
    }
  }
  return TruncatedSeries(std::move(out), tail);
}

TruncatedSeries compose(const TruncatedSeries& outer, const TruncatedSeries& inner) {
  if (std::abs(inner.coeff(0)) > 1e-14)
    throw NonzeroInnerConstant("compose: inner constant term must vanish");
  const int n = std::min(outer.order(), inner.order());

  // Horner from the top coefficient down; every step multiplies by `inner`,
  // whose vanishing constant term keeps coefficients <= n exact.
  std::vector<cplx> inner_poly(inner.coeffs().begin(),
                               inner.coeffs().begin() + n + 1);
  inner_poly[0] = cplx{0.0, 0.0};  // drop sub-1e-14 dust
  std::vector<cplx> acc{outer.coeff(n)};
  for (int k = n - 1; k >= 0; --k) {
    acc = mul_to_order(acc, inner_poly, n);
    acc[0] += outer.coeff(k);
  }
  acc.resize(static_cast<std::size_t>(n) + 1, cplx{0.0, 0.0});
  return TruncatedSeries(std::move(acc), std::nullopt);
}

TruncatedSeries exp(const TruncatedSeries& f) {
  const int n = f.order();
  std::vector<cplx> e(static_cast<std::size_t>(n) + 1);
  e[0] = std::exp(f.coeff(0));
  for (int m = 1; m <= n; ++m) {
    cplx acc{0.0, 0.0};
    for (int k = 1; k <= m; ++k)
      acc += static_cast<double>(k) * f.coeff(k) * e[static_cast<std::size_t>(m - k)];
    e[static_cast<std::size_t>(m)] = acc / static_cast<double>(m);
  }
  return TruncatedSeries(std::move(e), std::nullopt);
}

cplx eval(const TruncatedSeries& f, cplx z) {
  cplx acc{0.0, 0.0};
  for (int k = f.order(); k >= 0; --k) acc = acc * z + f.coeff(k);
  return acc;
}

std::optional<double> eval_error_bound(const TruncatedSeries& f, double abs_z) {
  if (!f.tail()) return std::nullopt;
  const double q = f.tail()->rho * abs_z;
  if (!(q < 1.0)) return std::nullopt;
  return f.tail()->constant * std::pow(q, f.order() + 1) / (1.0 - q);
}

MajorantSum majorant_sum(const TruncatedSeries& f, double r, bool include_constant) {
  if (!(r >= 0.0 && r < 1.0))
    throw RadiusOutOfRange("majorant_sum: radius must lie in [0, 1)");
  MajorantSum out;
  // Horner on |a_m| from the top keeps the sum nonnegative and stable.
  double acc = 0.0;
  for (int m = f.order(); m >= 1; --m) acc = acc * r + std::abs(f.coeff(m));
  acc *= r;
  if (include_constant) acc += std::abs(f.coeff(0));
  out.value = acc;
  if (f.tail()) {
    const double q = f.tail()->rho * r;  // < 1 since rho <= 1 and r < 1
    out.tail_bound = f.tail()->constant * std::pow(q, f.order() + 1) / (1.0 - q);
    out.certified = true;
  }
  return out;
}

}  // namespace bohrlab
