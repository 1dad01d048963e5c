// d2dsec - secrecy-rate simulator for D2D underlaid cellular uplinks
// Copyright (C) 2026 the d2dsec authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#pragma once

#include <cmath>
#include <complex>
#include <cstdint>

namespace d2dsec {

/**
 * Deterministic random stream used by all sampling code.
 *
 * Built on the splitmix64 generator so that results are reproducible
 * bit-for-bit across runs and platforms for a given seed; the standard
 * library distributions are deliberately avoided because their output is
 * implementation defined. A stream is single-owner: share seeds, not
 * streams, across workers.
 */
class RandomStream {
 public:
  explicit RandomStream(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    state_ += 0x9e3779b97f4a7c15ull;
    return mix(state_);
  }

  // Uniform on [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // Standard normal via the Box-Muller transform (no cached spare, so the
  // draw count per call is fixed).
  double normal() {
    const double u1 = 1.0 - uniform();  // (0, 1], keeps log() finite
    const double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * pi() * u2);
  }

  // Circularly-symmetric complex Gaussian with unit variance, CN(0, 1).
  std::complex<double> cgauss() {
    const double s = std::sqrt(0.5);
    const double re = normal();
    const double im = normal();
    return {s * re, s * im};
  }

  // Derives an independent child seed from a base seed and up to two keys.
  // Used for per-topology child streams so that evaluation order (or a
  // future worker pool) cannot perturb sampled data.
  static std::uint64_t derive(std::uint64_t base, std::uint64_t key1,
                              std::uint64_t key2 = 0) {
    return mix(mix(mix(base + 0x9e3779b97f4a7c15ull) ^ key1) ^ key2);
  }

 private:
  static constexpr double pi() { return 3.141592653589793238462643383279502884; }

  static std::uint64_t mix(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  std::uint64_t state_;
};

}  // namespace d2dsec
