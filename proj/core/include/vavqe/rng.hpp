// Copyright 2026 The vavqe developers

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
/**
 * @file rng.hpp
 * Deterministic draws on top of std::mt19937_64. The std distribution
 * classes leave their algorithms implementation-defined; these helpers
 * consume the standardized raw stream directly so identical seeds give
 * identical runs on every toolchain.
 */
#pragma once

#include <cstdint>
#include <numbers>
#include <random>

namespace vavqe {

/// Uniform integer in [0, n), n >= 1. Rejection sampling on the raw
/// 64-bit stream; no modulo bias.
inline std::uint64_t bounded_u64(std::mt19937_64 &rng, std::uint64_t n) {
    const std::uint64_t threshold = (0 - n) % n;
    for (;;) {
        std::uint64_t r = rng();
        if (r >= threshold)
            return r % n;
    }
}

/// Uniform real in [0, 1) with 53-bit resolution.
inline double unit_real(std::mt19937_64 &rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

/// Uniform angle in (-pi, pi].
inline double uniform_angle(std::mt19937_64 &rng) {
    return std::numbers::pi - unit_real(rng) * 2.0 * std::numbers::pi;
}

} // namespace vavqe
