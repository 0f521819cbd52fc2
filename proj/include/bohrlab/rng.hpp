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

#ifndef BOHRLAB_RNG_HPP
#define BOHRLAB_RNG_HPP

#include <cmath>
#include <complex>
#include <cstdint>

namespace bohrlab {

// SplitMix64. Small, fast, and bit-reproducible across platforms, which the
// report determinism contract needs; std:: distributions are not portable.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform double in the open interval (0, 1).
  double next_unit() {
    return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
  }

  /// Uniform double in [lo, hi).
  double next_range(double lo, double hi) { return lo + (hi - lo) * next_unit(); }

  /// Standard normal via Box-Muller.
  double next_gaussian() {
    const double u1 = next_unit();
    const double u2 = next_unit();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586476925287 * u2);
  }

  /// Complex standard normal (independent real/imaginary parts).
  std::complex<double> next_complex_gaussian() {
    const double re = next_gaussian();
    const double im = next_gaussian();
    return {re, im};
  }

  /// Uniform point in the closed unit disk.
  std::complex<double> next_in_disk() {
    const double r = std::sqrt(next_unit());
    const double th = 6.283185307179586476925287 * next_unit();
    return {r * std::cos(th), r * std::sin(th)};
  }

 private:
  std::uint64_t state_;
};

/// Derives an independent per-task seed from a master seed and a task index,
/// so parallel sample loops stay deterministic regardless of scheduling.
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) {
  SplitMix64 g(master ^ (0x6a09e667f3bcc909ULL + index * 0x9e3779b97f4a7c15ULL));
  return g.next_u64();
}

}  // namespace bohrlab

#endif  // BOHRLAB_RNG_HPP
