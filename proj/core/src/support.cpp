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

#include "nfwave/support.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace nfwave
{
    void SupportConfig::validate() const
    {
        if (!(beta > 0.0 && beta < 1.0))
            throw std::invalid_argument("SupportConfig: beta must lie in (0, 1)");
        if (oversample < 1)
            throw std::invalid_argument("SupportConfig: oversample must be >= 1");
        if (!(band_fraction > 0.0 && band_fraction <= 1.0))
            throw std::invalid_argument("SupportConfig: band_fraction must lie in (0, 1]");
    }

    PeakRun peak_run(std::span<const double> magnitude, double beta)
    {
        if (magnitude.empty())
            throw std::invalid_argument("peak_run: empty spectrum");
        PeakRun run;
        run.peak = std::size_t(std::max_element(magnitude.begin(), magnitude.end()) - magnitude.begin());
        const double peak = magnitude[run.peak];
        if (!(peak > 0.0))
            throw std::domain_error("peak_run: spectrum is identically zero");

        const double threshold = beta * peak;
        run.first = run.peak;
        while (run.first > 0 && magnitude[run.first - 1] >= threshold)
            --run.first;
        run.last = run.peak;
        while (run.last + 1 < magnitude.size() && magnitude[run.last + 1] >= threshold)
            ++run.last;
        return run;
    }

    SupportEstimate extract_support(const ComplexSpectrum &spectrum, const SupportConfig &scfg)
    {
        scfg.validate();
        if (spectrum.grid.size() != spectrum.values.size())
            throw std::invalid_argument("extract_support: grid and values differ in length");

        const auto mag = spectrum.magnitudes();
        const auto &k = spectrum.grid.points;
        const PeakRun run = peak_run(mag, scfg.beta);
        const double threshold = scfg.beta * mag[run.peak];

        // crossing between an outside sample `o` (below threshold) and an inside sample `i`
        const auto crossing = [&](std::size_t o, std::size_t i) {
            const double t = (threshold - mag[o]) / (mag[i] - mag[o]);
            return k[o] + t * (k[i] - k[o]);
        };

        SupportEstimate est;
        if (run.first == 0)
        {
            est.truncated_lower = true;
            est.interval.lower = k.front();
        }
        else
            est.interval.lower = crossing(run.first - 1, run.first);

        if (run.last + 1 == mag.size())
        {
            est.truncated_upper = true;
            est.interval.upper = k.back();
        }
        else
            est.interval.upper = crossing(run.last + 1, run.last);
        return est;
    }

    SupportEstimate support_from_angular(const ComplexVector &angular, const ArrayConfig &cfg,
                                         const SupportConfig &scfg)
    {
        scfg.validate();
        const WaveGrid grid = WaveGrid::oversampled(cfg, scfg.oversample, scfg.band_fraction);
        return extract_support(sinc_interpolate(angular, cfg, grid), scfg);
    }

} // namespace nfwave
