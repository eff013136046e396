// SPDX-License-Identifier: Apache-2.0
//
// chanest - multipath channel parameter estimation
// Copyright (C) 2026 chanest contributors
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

#ifndef CHANEST_RNG_HPP
#define CHANEST_RNG_HPP

#include <cmath>
#include <cstdint>
#include <numbers>
#include <stdexcept>

#include "chanest/cmatrix.hpp"

namespace chanest {

/// Deterministic PRNG based on the SplitMix64 generator. The same seed
/// produces a bit-identical stream on every platform. Streams for
/// independent workers are derived with split() or Rng::mix.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    /// Uniform double in [0, 1) with 53 bits of precision.
    double uniform() { return double(next_u64() >> 11) * 0x1.0p-53; }

    /// Uniform double in [lo, hi).
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    /// One standard-normal pair via the Box-Muller transform.
    void normal_pair(double& a, double& b) {
        const double u1 = 1.0 - uniform(); // (0, 1]
        const double u2 = uniform();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double phi = 2.0 * std::numbers::pi * u2;
        a = r * std::cos(phi);
        b = r * std::sin(phi);
    }

    /// Circular complex Gaussian with E|z|^2 = variance.
    cplx complex_normal(double variance) {
        double a, b;
        normal_pair(a, b);
        const double s = std::sqrt(0.5 * variance);
        return {s * a, s * b};
    }

    /// Unit-magnitude complex number with uniform random phase.
    cplx random_phase() {
        const double phi = 2.0 * std::numbers::pi * uniform();
        return {std::cos(phi), std::sin(phi)};
    }

    /// Derive an independently seeded generator.
    Rng split() { return Rng(next_u64()); }

    /// Stateless seed derivation, used to build per-run seeds.
    static std::uint64_t mix(std::uint64_t a, std::uint64_t b) {
        Rng r(a ^ (b + 0x9E3779B97F4A7C15ULL));
        return r.next_u64();
    }

  private:
    std::uint64_t state_;
};

/// Matrix with i.i.d. circular complex Gaussian entries of the given
/// per-entry variance (real and imaginary parts each carry variance/2).
inline CMatrix sample_complex_gaussian(Rng& rng, int rows, int cols, double variance) {
    if (variance < 0.0)
        throw std::invalid_argument("sample_complex_gaussian: negative variance");
    CMatrix out(rows, cols);
    if (variance == 0.0)
        return out;
    for (int c = 0; c < cols; ++c)
        for (int r = 0; r < rows; ++r)
            out(r, c) = rng.complex_normal(variance);
    return out;
}

} // namespace chanest

#endif
