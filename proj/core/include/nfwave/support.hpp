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

#ifndef NFWAVE_SUPPORT_HPP
#define NFWAVE_SUPPORT_HPP

#include "nfwave/posp.hpp"
#include "nfwave/spectral.hpp"

#include <cstddef>
#include <span>

namespace nfwave
{
    struct SupportConfig
    {
        double beta = 0.42;         // threshold relative to the spectral peak, in (0, 1)
        int oversample = 16;        // evaluation grid step = DFT bin spacing / oversample
        double band_fraction = 1.0; // searched part of |k_x| <= 2 pi / lambda

        void validate() const; // throws std::invalid_argument
    };

    // Indices [first, last] of the maximal run around the global peak with magnitude >= beta * peak.
    struct PeakRun
    {
        std::size_t peak = 0;
        std::size_t first = 0;
        std::size_t last = 0;
    };

    // Throws std::invalid_argument on empty input and std::domain_error when all magnitudes are zero.
    PeakRun peak_run(std::span<const double> magnitude, double beta);

    struct SupportEstimate
    {
        WaveInterval interval;
        bool truncated_lower = false; // run reached the first grid point
        bool truncated_upper = false; // run reached the last grid point

        bool truncated() const { return truncated_lower || truncated_upper; }
    };

    // Measured diffusion support {k_x : |H(k_x)| >= beta max |H|}, restricted to the contiguous run
    // containing the global peak. Endpoints are refined by linear interpolation of |H| across the
    // threshold crossing; a run that reaches the grid boundary is truncated there and flagged.
    SupportEstimate extract_support(const ComplexSpectrum &spectrum, const SupportConfig &scfg);

    // Sinc-interpolates the angular samples onto the oversampled grid, then extracts the support.
    SupportEstimate support_from_angular(const ComplexVector &angular, const ArrayConfig &cfg,
                                         const SupportConfig &scfg);

} // namespace nfwave

#endif
