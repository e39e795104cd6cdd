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

#ifndef NFWAVE_METRICS_HPP
#define NFWAVE_METRICS_HPP

#include "nfwave/geometry.hpp"
#include "nfwave/posp.hpp"

#include <cstddef>
#include <span>
#include <string>

namespace nfwave
{
    // |a intersect b| / |a union b| with length measure. Two identical zero-width intervals give 1,
    // any other pair with a zero-length union gives 0.
    double jaccard(const WaveInterval &a, const WaveInterval &b);

    struct TrialRecord
    {
        std::string scheme;
        double snr_db = 0.0;
        double true_omega = 0.0;
        double est_omega = 0.0;
        double true_r = 0.0;
        double est_r = 0.0; // may be kFarField
        double rate = 0.0;
        double eff_rate = 0.0;
    };

    // E|est - true|^2 / E|true|^2 over the records. Throws std::invalid_argument on empty input or a
    // zero denominator.
    double nmse_angle(std::span<const TrialRecord> records);

    struct DistanceNmse
    {
        double nmse = 0.0;            // NaN when every record carried a far-field verdict
        std::size_t used = 0;         // records entering the ratio
        std::size_t far_field = 0;    // records excluded because est_r is the far-field sentinel
    };
    DistanceNmse nmse_distance(std::span<const TrialRecord> records);

    enum class RateConvention
    {
        squared, // log2(1 + |h^H v|^2 / sigma^2)
        literal  // log2(1 + |h^H v| / sigma^2), as printed in some references
    };

    struct Rates
    {
        double rate = 0.0;
        double eff_rate = 0.0;
    };

    // Achievable and overhead-discounted rate for a unit-norm beamformer v. The training fraction
    // t_tra / t_tot is capped at 1, so a training phase longer than the frame yields eff_rate = 0.
    Rates rates(const ComplexVector &h, const ComplexVector &v, double noise_var, double t_tra, double t_tot,
                RateConvention convention = RateConvention::squared);

    struct SampleSummary
    {
        double mean = 0.0;
        double std_error = 0.0; // sample standard deviation / sqrt(n); 0 for n < 2
        std::size_t count = 0;
    };
    SampleSummary summarize(std::span<const double> samples);

} // namespace nfwave

#endif
