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

#ifndef BOHRLAB_SERIES_HPP
#define BOHRLAB_SERIES_HPP

#include <complex>
#include <optional>
#include <vector>

#include "bohrlab/errors.hpp"

namespace bohrlab {

using cplx = std::complex<double>;

/// Certified geometric bound on the coefficients past the stored order:
/// |a_m| <= constant * rho^m for every m > N.
///
/// rho == 1 is admitted (Caratheodory-type slices have |c_n| <= 2 with no
/// geometric decay); such a bound is only usable at radii r with rho*r < 1,
/// which majorant_sum guarantees by requiring r < 1.
struct TailBound {
  double constant = 0.0;  // >= 0
  double rho = 0.0;       // in [0, 1]
};

/// Truncated complex power series a_0 + a_1 z + ... + a_N z^N together with
/// an optional certified tail bound. Immutable after construction; all
/// operations are pure functions, so values are safe to share across threads.
class TruncatedSeries {
 public:
  /// The zero series with an exact (0, 0) tail.
  TruncatedSeries() : coeffs_(1, cplx{0.0, 0.0}), tail_(TailBound{0.0, 0.0}) {}

  /// Throws Error on empty coefficients, non-finite entries, or an invalid
  /// tail (constant < 0 or rho outside [0, 1]).
  explicit TruncatedSeries(std::vector<cplx> coeffs,
                           std::optional<TailBound> tail = std::nullopt);

  int order() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<cplx>& coeffs() const { return coeffs_; }
  cplx coeff(int m) const {
    return (m >= 0 && m <= order()) ? coeffs_[static_cast<std::size_t>(m)]
                                    : cplx{0.0, 0.0};
  }
  const std::optional<TailBound>& tail() const { return tail_; }

  TruncatedSeries with_tail(TailBound t) const { return TruncatedSeries(coeffs_, t); }
  TruncatedSeries without_tail() const { return TruncatedSeries(coeffs_, std::nullopt); }

  /// Copy truncated to the given order (tail is dropped: the discarded stored
  /// coefficients are not covered by the original tail).
  TruncatedSeries truncated(int new_order) const;

 private:
  std::vector<cplx> coeffs_;
  std::optional<TailBound> tail_;
};

/// z itself, as a degree-`order` polynomial with a zero tail.
TruncatedSeries identity_series(int order);
/// The constant c with a zero tail.
TruncatedSeries constant_series(cplx c);

/// Coefficient-wise sum to order min(N_f, N_g). The result carries a tail
/// only when both inputs do and a sound constant exists for rho' =
/// max(rho_f, rho_g); stored coefficients of the longer input beyond the
/// output order are folded into the constant.
TruncatedSeries add(const TruncatedSeries& f, const TruncatedSeries& g);

/// f scaled by a complex factor; tail constant scales by |factor|.
TruncatedSeries scale(const TruncatedSeries& f, cplx factor);

/// Cauchy product to order min(N_f, N_g). Tail propagation is conservative:
/// present only when both inputs carry tails and a valid (C', max rho) pair
/// exists (it does not when rho_f == rho_g with both constants positive --
/// such products genuinely grow like n*rho^n).
TruncatedSeries mul(const TruncatedSeries& f, const TruncatedSeries& g);

/// Composition outer(inner(z)) to order min(N_outer, N_inner) by Horner
/// accumulation. Exact to that order for exact inputs because inner(0) = 0.
/// Throws NonzeroInnerConstant if |inner a_0| > 1e-14. The result carries no
/// tail.
TruncatedSeries compose(const TruncatedSeries& outer, const TruncatedSeries& inner);

/// exp(f) to the order of f via the recurrence n e_n = sum_{k=1..n} k f_k e_{n-k},
/// e_0 = exp(f_0). No tail on the result.
TruncatedSeries exp(const TruncatedSeries& f);

/// Horner evaluation of the stored polynomial part.
cplx eval(const TruncatedSeries& f, cplx z);

/// Bound on |true value - eval(f, z)| from the tail, when certified and
/// rho*|z| < 1.
std::optional<double> eval_error_bound(const TruncatedSeries& f, double abs_z);

struct MajorantSum {
  double value = 0.0;       // sum over stored coefficients
  double tail_bound = 0.0;  // certified bound on the discarded tail, if any
  bool certified = false;   // true iff a tail bound was available
  double total() const { return certified ? value + tail_bound : value; }
};

/// Bohr majorant sum_m |a_m| r^m over stored coefficients (m >= 1 unless
/// include_constant), with the certified geometric tail bound
/// C (rho r)^{N+1} / (1 - rho r) when a tail is present.
/// Throws RadiusOutOfRange unless 0 <= r < 1.
MajorantSum majorant_sum(const TruncatedSeries& f, double r, bool include_constant);

inline TruncatedSeries operator+(const TruncatedSeries& f, const TruncatedSeries& g) {
  return add(f, g);
}
inline TruncatedSeries operator*(const TruncatedSeries& f, const TruncatedSeries& g) {
  return mul(f, g);
}

}  // namespace bohrlab

#endif  // BOHRLAB_SERIES_HPP
