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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "bohrlab/atlas.hpp"
#include "bohrlab/rng.hpp"
#include "bohrlab/series.hpp"

using namespace bohrlab;

namespace {

// Random polynomial whose stated tail is valid by construction: the stored
// coefficients satisfy |a_k| <= C rho^k and everything beyond is zero.
TruncatedSeries random_enveloped(SplitMix64& g, int order, double c, double rho) {
  std::vector<cplx> coeffs(static_cast<std::size_t>(order) + 1);
  double env = c;
  for (int k = 0; k <= order; ++k) {
    coeffs[static_cast<std::size_t>(k)] = env * g.next_in_disk();
    env *= rho;
  }
  return TruncatedSeries(std::move(coeffs), TailBound{c, rho});
}

double coeff_distance(const TruncatedSeries& a, const TruncatedSeries& b) {
  const int n = std::min(a.order(), b.order());
  double d = 0.0;
  for (int k = 0; k <= n; ++k) d = std::max(d, std::abs(a.coeff(k) - b.coeff(k)));
  return d;
}

}  // namespace

TEST_CASE("construction validates") {
  CHECK_THROWS_AS(TruncatedSeries(std::vector<cplx>{}), Error);
  CHECK_THROWS_AS(TruncatedSeries({cplx{std::nan(""), 0.0}}), Error);
  CHECK_THROWS_AS(TruncatedSeries({cplx{1.0, 0.0}}, TailBound{-1.0, 0.5}), Error);
  CHECK_THROWS_AS(TruncatedSeries({cplx{1.0, 0.0}}, TailBound{1.0, 1.5}), Error);
  CHECK(TruncatedSeries().order() == 0);
  CHECK(TruncatedSeries().tail().has_value());
}

TEST_CASE("add identities") {
  const TruncatedSeries f({cplx{1, 0}, cplx{2, 0}});
  const TruncatedSeries zero({cplx{0, 0}, cplx{0, 0}});
  const TruncatedSeries s = add(f, zero);
  CHECK(s.coeff(0) == cplx{1, 0});
  CHECK(s.coeff(1) == cplx{2, 0});

  const TruncatedSeries l = moebius_l_series(20);
  const TruncatedSeries cancel = add(l, scale(l, cplx{-1, 0}));
  for (int k = 0; k <= 20; ++k) CHECK(cancel.coeff(k) == cplx{0, 0});
  // tails add: (2,1) + (2,1) -> (4,1)
  REQUIRE(cancel.tail().has_value());
  CHECK(cancel.tail()->constant == 4.0);
  CHECK(cancel.tail()->rho == 1.0);

  const TruncatedSeries a({cplx{1, 0}, cplx{1, 0}});
  const TruncatedSeries b({cplx{1, 0}, cplx{-1, 0}});
  const TruncatedSeries two = add(a, b);
  CHECK(two.coeff(0) == cplx{2, 0});
  CHECK(two.coeff(1) == cplx{0, 0});
}

TEST_CASE("mul: L*L has the slit-family coefficients 4n") {
  const TruncatedSeries l = moebius_l_series(50);
  const TruncatedSeries u = mul(l, l);
  CHECK(u.coeff(0) == cplx{1, 0});
  for (int n = 1; n <= 50; ++n) CHECK(u.coeff(n).real() == 4.0 * n);
  // equal tail ratios with positive constants: no geometric tail exists
  CHECK_FALSE(u.tail().has_value());
}

TEST_CASE("mul identities") {
  const TruncatedSeries f({cplx{2, 1}, cplx{0, 3}, cplx{-1, 0}});
  const TruncatedSeries one({cplx{1, 0}, cplx{0, 0}, cplx{0, 0}});
  CHECK(coeff_distance(mul(f, one), f) == 0.0);

  const TruncatedSeries a({cplx{1, 0}, cplx{1, 0}, cplx{0, 0}});
  const TruncatedSeries b({cplx{1, 0}, cplx{-1, 0}, cplx{0, 0}});
  const TruncatedSeries prod = mul(a, b);
  CHECK(prod.coeff(0) == cplx{1, 0});
  CHECK(prod.coeff(1) == cplx{0, 0});
  CHECK(prod.coeff(2) == cplx{-1, 0});
}

TEST_CASE("mul tail is a genuine majorant of the discarded coefficients") {
  SplitMix64 g(2026);
  for (int trial = 0; trial < 50; ++trial) {
    const TruncatedSeries f = random_enveloped(g, 12, 1.5, 0.7);
    const TruncatedSeries h = random_enveloped(g, 12, 0.8, 0.6);
    const TruncatedSeries p = mul(f, h);
    REQUIRE(p.tail().has_value());
    // full polynomial product as the oracle
    std::vector<cplx> full(25, cplx{0, 0});
    for (int i = 0; i <= 12; ++i)
      for (int j = 0; j <= 12; ++j)
        full[static_cast<std::size_t>(i + j)] += f.coeff(i) * h.coeff(j);
    for (int m = p.order() + 1; m <= 24; ++m) {
      const double bound =
          p.tail()->constant * std::pow(p.tail()->rho, m) + 1e-12;
      CHECK(std::abs(full[static_cast<std::size_t>(m)]) <= bound);
    }
  }
}

TEST_CASE("eval consistency: mul agrees with pointwise product inside |z| <= 0.5") {
  SplitMix64 g(11);
  for (int trial = 0; trial < 200; ++trial) {
    const TruncatedSeries f = random_enveloped(g, 20, 2.0, 0.7);
    const TruncatedSeries h = random_enveloped(g, 20, 1.0, 0.6);
    const TruncatedSeries p = mul(f, h);
    const cplx z = 0.5 * g.next_in_disk();
    const cplx lhs = eval(p, z);
    const cplx rhs = eval(f, z) * eval(h, z);
    const double slack = eval_error_bound(p, std::abs(z)).value_or(0.0);
    CHECK(std::abs(lhs - rhs) <= slack + 1e-10);
  }
}

TEST_CASE("compose requires a vanishing inner constant") {
  const TruncatedSeries outer = moebius_l_series(10);
  const TruncatedSeries bad({cplx{0.5, 0}, cplx{1, 0}});
  CHECK_THROWS_AS(compose(outer, bad), NonzeroInnerConstant);
}

TEST_CASE("compose with the identity returns the outer series") {
  const TruncatedSeries outer({cplx{1, 2}, cplx{3, -1}, cplx{0, 0.5}, cplx{2, 2}});
  const TruncatedSeries id = identity_series(3);
  CHECK(coeff_distance(compose(outer, id), outer) == 0.0);
}

TEST_CASE("compose L with cz gives the scaled geometric coefficients") {
  const double c = 0.37;
  std::vector<cplx> inner_c(21, cplx{0, 0});
  inner_c[1] = cplx{c, 0};
  const TruncatedSeries inner(std::move(inner_c));
  const TruncatedSeries out = compose(moebius_l_series(20), inner);
  CHECK(out.coeff(0).real() == doctest::Approx(1.0).epsilon(1e-15));
  double expect = 2.0;
  for (int m = 1; m <= 20; ++m) {
    expect *= c;
    CHECK(out.coeff(m).real() == doctest::Approx(expect).epsilon(1e-12));
    CHECK(out.coeff(m).imag() == 0.0);
  }
}

TEST_CASE("compose associativity to truncation order") {
  SplitMix64 g(5);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<cplx> fc(16), gc(16), hc(16);
    for (auto* v : {&fc, &gc, &hc})
      for (auto& z : *v) z = 0.8 * g.next_in_disk();
    gc[0] = hc[0] = cplx{0, 0};
    const TruncatedSeries f(std::move(fc)), gg(std::move(gc)), hh(std::move(hc));
    const TruncatedSeries lhs = compose(compose(f, gg), hh);
    const TruncatedSeries rhs = compose(f, compose(gg, hh));
    CHECK(coeff_distance(lhs, rhs) <= 1e-10);
  }
}

TEST_CASE("exp basics") {
  const TruncatedSeries zero({cplx{0, 0}, cplx{0, 0}, cplx{0, 0}});
  const TruncatedSeries one = exp(zero);
  CHECK(one.coeff(0) == cplx{1, 0});
  CHECK(one.coeff(1) == cplx{0, 0});

  const TruncatedSeries z = identity_series(12);
  const TruncatedSeries e = exp(z);
  double factorial = 1.0;
  for (int n = 0; n <= 12; ++n) {
    if (n > 0) factorial *= n;
    CHECK(e.coeff(n).real() == doctest::Approx(1.0 / factorial).epsilon(1e-14));
  }
}

TEST_CASE("exp is a homomorphism: exp(f+g) = exp(f) exp(g)") {
  SplitMix64 g(17);
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<cplx> fc(21), gc(21);
    for (auto& z : fc) z = 0.5 * g.next_in_disk();
    for (auto& z : gc) z = 0.5 * g.next_in_disk();
    const TruncatedSeries f(std::move(fc)), h(std::move(gc));
    const TruncatedSeries lhs = exp(add(f, h));
    const TruncatedSeries rhs = mul(exp(f), exp(h));
    CHECK(coeff_distance(lhs, rhs) <= 1e-10);
  }
}

TEST_CASE("exp of -t L reproduces the explicit singular-inner coefficients") {
  for (double t : {0.5, 1.0, 2.0}) {
    const TruncatedSeries viaExp = exp(scale(moebius_l_series(50), cplx{-t, 0}));
    const TruncatedSeries explicit_form = h_t_series(t, 50);
    CHECK(coeff_distance(viaExp, explicit_form) <= 1e-10);
  }
}

TEST_CASE("majorant_sum on the half-plane extremal") {
  const TruncatedSeries l = moebius_l_series(200);
  const MajorantSum ms = majorant_sum(l, 1.0 / 3.0, false);
  // sum 2 (1/3)^m = 1 up to the stored order
  CHECK(ms.value == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(ms.certified);
  // tail = 2 r^{201}/(1-r): astronomically small but present
  CHECK(ms.tail_bound > 0.0);
  CHECK(ms.tail_bound < 1e-90);
  CHECK(ms.total() == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("majorant_sum of zero and range checks") {
  const TruncatedSeries zero;
  CHECK(majorant_sum(zero, 0.7, true).total() == 0.0);
  CHECK_THROWS_AS(majorant_sum(zero, -0.1, false), RadiusOutOfRange);
  CHECK_THROWS_AS(majorant_sum(zero, 1.0, false), RadiusOutOfRange);
}

TEST_CASE("majorant_sum on the slit extremal at its sharp radius") {
  const double r = 3.0 - 2.0 * std::sqrt(2.0);
  const TruncatedSeries u = koebe_square_series(200, 1.0);
  const MajorantSum ms = majorant_sum(u, r, false);
  // 4r/(1-r)^2 = 1 exactly at r = 3-2sqrt(2)
  CHECK(ms.value == doctest::Approx(1.0).epsilon(1e-13));
  CHECK_FALSE(ms.certified);
}

TEST_CASE("majorant_sum is nondecreasing in r") {
  SplitMix64 g(23);
  for (int trial = 0; trial < 20; ++trial) {
    const TruncatedSeries f = random_enveloped(g, 30, 2.0, 0.9);
    double prev = 0.0;
    for (int i = 0; i <= 40; ++i) {
      const double r = i / 41.0;
      const double v = majorant_sum(f, r, false).total();
      CHECK(v >= prev - 1e-15);
      prev = v;
    }
  }
}

TEST_CASE("scale rotates coefficients and keeps the tail envelope") {
  const TruncatedSeries l = moebius_l_series(10);
  const TruncatedSeries s = scale(l, cplx{0, 0.5});
  CHECK(std::abs(s.coeff(1)) == doctest::Approx(1.0).epsilon(1e-15));
  REQUIRE(s.tail().has_value());
  CHECK(s.tail()->constant == doctest::Approx(1.0).epsilon(1e-15));
}
