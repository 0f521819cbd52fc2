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

#ifndef BOHRLAB_ENGINE_HPP
#define BOHRLAB_ENGINE_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "bohrlab/atlas.hpp"
#include "bohrlab/series.hpp"

namespace bohrlab {

enum class CodomainKind {
  HalfPlane,     // Re z > 0
  Slit,          // plane minus the closed negative real axis
  PuncturedDisk, // 0 < |z| < 1
  ExteriorDisk,  // |z| > 1 (spherical inequality)
  ConvexVia,     // convex domain reduced through (u, t)
};

/// Target domain plus the parameters the convex reduction needs.
struct Codomain {
  CodomainKind kind = CodomainKind::HalfPlane;
  cplx u{0.0, 0.0};  // nearest boundary point (ConvexVia)
  double rot = 0.0;  // rotation angle t (ConvexVia)

  static Codomain half_plane() { return {CodomainKind::HalfPlane}; }
  static Codomain slit() { return {CodomainKind::Slit}; }
  static Codomain punctured() { return {CodomainKind::PuncturedDisk}; }
  static Codomain exterior() { return {CodomainKind::ExteriorDisk}; }
  static Codomain convex_via(cplx u, double t) {
    return {CodomainKind::ConvexVia, u, t};
  }
};

/// How to read the boundary distance for the punctured disk. PaperThreshold
/// is the literal value 1; EuclideanDistance is min(|a0|, 1 - |a0|), the
/// distance to the two-piece boundary {0} u {|z| = 1}. The sharpness
/// constructions only bite under the Euclidean reading.
enum class PuncturedGap { PaperThreshold, EuclideanDistance };

/// Whether the spherical majorant starts at m = 0 (the verifiable inequality
/// chain) or m = 1 (the bare statement form, degenerate as r -> 0).
enum class SphericalSumForm { FromConstant, FromFirstOrder };

/// Point on the Riemann sphere: a finite complex number or infinity.
struct SpherePoint {
  cplx value{0.0, 0.0};
  bool infinite = false;

  SpherePoint() = default;
  SpherePoint(cplx v) : value(v) {}
  SpherePoint(double v) : value(v, 0.0) {}
  static SpherePoint infinity() {
    SpherePoint p;
    p.infinite = true;
    return p;
  }
};

/// Chordal distance lambda(z, w) = |z - w| / (sqrt(1+|z|^2) sqrt(1+|w|^2)),
/// with lambda(z, inf) = 1/sqrt(1+|z|^2). Always in [0, 1].
double spherical_lambda(const SpherePoint& a, const SpherePoint& b);

/// Euclidean distance from a0 to the codomain boundary. Throws
/// OutsideCodomain when a0 violates the codomain's hypothesis, and for
/// ExteriorDisk always (its inequality is spherical; use spherical_margin).
double boundary_gap(const Codomain& kind, cplx a0,
                    PuncturedGap gap_mode = PuncturedGap::PaperThreshold);

/// gap - (majorant excluding the constant term, tail bound included when
/// certified). Positive means the Bohr inequality holds at r as computed;
/// it is a certified statement when f carries a tail.
double euclidean_margin(const TruncatedSeries& f, const Codomain& kind, double r,
                        PuncturedGap gap_mode = PuncturedGap::PaperThreshold);

/// lambda(|a0|, 1) - lambda(M(r), |a0|) with M(r) the majorant including the
/// constant term by default. Requires |a0| > 1 (throws OutsideCodomain).
double spherical_margin(const TruncatedSeries& f, double r,
                        SphericalSumForm form = SphericalSumForm::FromConstant);

struct MarginPoint {
  double at;      // abscissa: r for radius solves, c for sharpness scans,
                  // |psi(y)|/||v|| for multidimensional slices
  double margin;
};

/// Witness of a Bohr-inequality violation; always has lhs > rhs.
struct ViolationRecord {
  std::vector<std::pair<std::string, double>> params;
  double r = 0.0;
  double lhs = 0.0;
  double rhs = 0.0;
};

struct BohrReport {
  double radius_lo = 0.0;
  double radius_hi = 0.0;
  std::vector<MarginPoint> margin_table;
  std::optional<ViolationRecord> witness;   // strongest violation, if any
  std::vector<ViolationRecord> violations;  // all violations, grid order
  bool certified = false;
  int iterations = 0;
  int worst_index = -1;  // margin_table index of the minimum (slice sweeps)
};

/// Closed-form worst-case margin for the codomain, normalized by the gap:
///   1 - 2r/(1-r)    half-plane, convex, punctured (t -> 0), exterior (a0 -> 1)
///   1 - 4r/(1-r)^2  slit
/// These remove truncation error from the certified bracket.
std::function<double(double)> worst_case_margin(const Codomain& kind);

/// Certified bisection of a nonincreasing margin on [0, 1 - 1e-9]: returns a
/// bracket with margin(radius_lo) >= 0 >= margin(radius_hi) and width <= tol.
/// If the margin never goes negative the bracket collapses at the scan limit.
/// Throws NoBracket if margin(0) < 0.
BohrReport solve_radius(const std::function<double(double)>& margin, double tol,
                        bool certified = false);

/// Worst-case radius for the codomain (closed form; certified).
BohrReport solve_radius(const Codomain& kind, double tol = 1e-12);

/// Radius for a concrete series under the codomain's margin.
BohrReport solve_radius(const TruncatedSeries& f, const Codomain& kind,
                        double tol = 1e-12,
                        PuncturedGap gap_mode = PuncturedGap::PaperThreshold);

struct SharpnessGrids {
  std::vector<double> c_grid{0.5, 0.6, 0.7, 0.8, 0.9, 0.95, 0.99};
  std::vector<double> t_grid{1.0, 0.5, 0.1, 0.05, 0.01, 0.005, 0.001};  // punctured
  std::vector<double> a0_grid{1.1, 1.01, 1.001, 1.0001};                // exterior
  int order = kDefaultOrder;
};

/// Scans the codomain's witness family over the grids at radius r0 > the
/// sharp radius and records every violation (margin < 0). Half-plane/convex
/// rows compare (1+cr0)/(1-cr0) against 2, slit rows the square against 2;
/// punctured rows use the H_t majorant against the Euclidean gap of e^{-t};
/// exterior rows compare chordal distances. Throws NoViolationFound when the
/// grid produces none (r0 at or below the sharp radius, or too coarse).
BohrReport sharpness_scan(const Codomain& kind, double r0, const SharpnessGrids& grids = {});

/// The limit 2 c r0 / (1 - c r0) of the exterior sharpness ratio.
double ratio_limit_value(double c, double r0);

/// Evaluates the exterior sharpness ratio
///   sqrt(2) a0 (a0^{2x/(1-x)} - 1) / ((a0-1) sqrt(1 + a0^{2(1+x)/(1-x)}))
/// (x = c r0) on the a0 grid; converges to ratio_limit_value as a0 -> 1+.
std::vector<std::pair<double, double>> ratio_limit(double c, double r0,
                                                   std::span<const double> a0_grid);

}  // namespace bohrlab

#endif  // BOHRLAB_ENGINE_HPP
