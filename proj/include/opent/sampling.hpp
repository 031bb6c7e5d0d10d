// Copyright 2026 The opent Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// Seedable, counter-addressed sampling of Haar-random states and unitaries.
//
// Reproducibility contract (bit-exact for a given build):
//   * word k of a stream (seed, counter = k) is splitmix64_mix(splitmix64_mix(seed) + (k + 1) * kGamma);
//   * a uniform double in (0, 1] is ((word >> 11) + 1) * 2^-53;
//   * one complex Gaussian consumes two uniforms u1, u2 via Box-Muller:
//         r = sqrt(-2 ln u1),  z = r cos(2 pi u2) + i r sin(2 pi u2);
//   * the substream of sample i is RandomStream::substream(seed, i).

#include <cmath>
#include <cstdint>
#include <numbers>
#include <vector>

#include "opent/error.hpp"
#include "opent/tensor.hpp"

namespace opent {

class RandomStream {
   public:
    explicit RandomStream(std::uint64_t seed, std::uint64_t counter = 0) noexcept : seed_(seed), counter_(counter) {}

    /// Independent stream for sample `index` of a run keyed by `seed`.
    static RandomStream substream(std::uint64_t seed, std::uint64_t index) noexcept {
        return RandomStream(mix(mix(seed) ^ mix(index + 0x6A09E667F3BCC909ULL)));
    }

    std::uint64_t seed() const noexcept { return seed_; }
    std::uint64_t counter() const noexcept { return counter_; }

    /// Pure function of (seed, counter); advances the counter.
    std::uint64_t next_u64() noexcept {
        const std::uint64_t word = mix(mix(seed_) + (counter_ + 1) * kGamma);
        ++counter_;
        return word;
    }

    /// Uniform on (0, 1].
    double next_uniform() noexcept { return static_cast<double>((next_u64() >> 11) + 1) * 0x1.0p-53; }

    /// Standard complex Gaussian with unit variance per component.
    Complex next_complex_gaussian() noexcept {
        const double u1 = next_uniform();
        const double u2 = next_uniform();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double phi = 2.0 * std::numbers::pi * u2;
        return {r * std::cos(phi), r * std::sin(phi)};
    }

    friend bool operator==(const RandomStream&, const RandomStream&) = default;

   private:
    static constexpr std::uint64_t kGamma = 0x9E3779B97F4A7C15ULL;

    static constexpr std::uint64_t mix(std::uint64_t z) noexcept {
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    std::uint64_t seed_;
    std::uint64_t counter_;
};

inline double vector_norm(std::span<const Complex> v) {
    double acc = 0.0;
    for (const auto& z : v) acc += std::norm(z);
    return std::sqrt(acc);
}

/// Fubini-Study uniform unit vector in C^d.
inline std::vector<Complex> haar_state(std::size_t d, RandomStream& stream) {
    if (d == 0) throw DimensionError("haar_state: dimension must be positive");
    std::vector<Complex> psi(d);
    for (auto& z : psi) z = stream.next_complex_gaussian();
    const double n = vector_norm(psi);
    for (auto& z : psi) z /= n;
    return psi;
}

/// Haar-distributed d x d unitary: Gram-Schmidt on the columns of a complex
/// Ginibre matrix (entries drawn row-major). Gram-Schmidt yields a QR factor with
/// positive diagonal R, which is exactly the phase fix needed for Haar measure.
inline DenseMatrix haar_unitary(std::size_t d, RandomStream& stream) {
    if (d == 0) throw DimensionError("haar_unitary: dimension must be positive");
    DenseMatrix g(d, d);
    for (std::size_t r = 0; r < d; ++r)
        for (std::size_t c = 0; c < d; ++c) g(r, c) = stream.next_complex_gaussian();

    for (std::size_t c = 0; c < d; ++c) {
        // two passes of modified Gram-Schmidt keep orthogonality at machine precision
        for (int pass = 0; pass < 2; ++pass) {
            for (std::size_t p = 0; p < c; ++p) {
                Complex proj{0.0, 0.0};
                for (std::size_t r = 0; r < d; ++r) proj += std::conj(g(r, p)) * g(r, c);
                for (std::size_t r = 0; r < d; ++r) g(r, c) -= proj * g(r, p);
            }
        }
        double n = 0.0;
        for (std::size_t r = 0; r < d; ++r) n += std::norm(g(r, c));
        n = std::sqrt(n);
        for (std::size_t r = 0; r < d; ++r) g(r, c) /= n;
    }
    return g;
}

}  // namespace opent
