// SPDX-License-Identifier: Apache-2.0
//
// nfwave: near-field XL-array channels in the wave-number domain
// Copyright (C) 2026 The nfwave Authors
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

#ifndef NFWAVE_RNG_HPP
#define NFWAVE_RNG_HPP

#include "nfwave/geometry.hpp"

#include <cmath>
#include <cstdint>
#include <random>

namespace nfwave
{
    // SplitMix64 finalizer
    constexpr std::uint64_t mix64(std::uint64_t z)
    {
        z += 0x9E3779B97F4A7C15ull;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    // Seed of stream `stream` in trial `trial`: mix64(mix64(master ^ mix64(trial)) + stream).
    // Streams of one trial and trials of one run never share a seed path.
    constexpr std::uint64_t derive_seed(std::uint64_t master, std::uint64_t trial, std::uint64_t stream)
    {
        return mix64(mix64(master ^ mix64(trial)) + stream);
    }

    // Circularly-symmetric complex Gaussian samples, reproducible for a given seed.
    class NoiseStream
    {
    public:
        explicit NoiseStream(std::uint64_t seed) : engine_(seed) {}

        // CN(0, variance); returns exactly 0 for variance == 0
        cd draw(double variance)
        {
            const double re = normal_(engine_);
            const double im = normal_(engine_);
            const double s = std::sqrt(0.5 * variance);
            return {s * re, s * im};
        }

        double uniform(double lo, double hi)
        {
            return std::uniform_real_distribution<double>(lo, hi)(engine_);
        }

    private:
        std::mt19937_64 engine_;
        std::normal_distribution<double> normal_{0.0, 1.0};
    };

} // namespace nfwave

#endif
