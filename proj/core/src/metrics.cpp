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

#include "nfwave/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace nfwave
{
    double jaccard(const WaveInterval &a, const WaveInterval &b)
    {
        if (!(a.upper >= a.lower) || !(b.upper >= b.lower))
            throw std::invalid_argument("jaccard: interval upper bound is below its lower bound");
        const double overlap = std::max(0.0, std::min(a.upper, b.upper) - std::max(a.lower, b.lower));
        const double span = std::max(a.upper, b.upper) - std::min(a.lower, b.lower);
        // union of overlapping intervals is their span; of disjoint ones, the sum of lengths
        const double uni = overlap > 0.0 ? span : a.width() + b.width();
        if (uni <= 0.0)
            return (a.lower == b.lower && a.upper == b.upper) ? 1.0 : 0.0;
        return overlap / uni;
    }

    double nmse_angle(std::span<const TrialRecord> records)
    {
        if (records.empty())
            throw std::invalid_argument("nmse_angle: no records");
        double num = 0.0, den = 0.0;
        for (const auto &r : records)
        {
            const double e = r.est_omega - r.true_omega;
            num += e * e;
            den += r.true_omega * r.true_omega;
        }
        if (!(den > 0.0))
            throw std::invalid_argument("nmse_angle: E|Omega|^2 is zero");
        return num / den;
    }

    DistanceNmse nmse_distance(std::span<const TrialRecord> records)
    {
        if (records.empty())
            throw std::invalid_argument("nmse_distance: no records");
        DistanceNmse out;
        double num = 0.0, den = 0.0;
        for (const auto &r : records)
        {
            if (is_far_field(r.est_r))
            {
                ++out.far_field;
                continue;
            }
            const double e = r.est_r - r.true_r;
            num += e * e;
            den += r.true_r * r.true_r;
            ++out.used;
        }
        if (out.used == 0)
        {
            out.nmse = std::numeric_limits<double>::quiet_NaN();
            return out;
        }
        if (!(den > 0.0))
            throw std::invalid_argument("nmse_distance: E|r0|^2 is zero");
        out.nmse = num / den;
        return out;
    }

    Rates rates(const ComplexVector &h, const ComplexVector &v, double noise_var, double t_tra, double t_tot,
                RateConvention convention)
    {
        if (h.size() != v.size())
            throw std::invalid_argument("rates: channel and beamformer differ in length");
        if (!(noise_var > 0.0))
            throw std::invalid_argument("rates: noise variance must be positive");
        if (!(t_tot > 0.0) || t_tra < 0.0)
            throw std::invalid_argument("rates: need t_tot > 0 and t_tra >= 0");
        if (std::abs(v.norm() - 1.0) > 1e-9)
            throw std::invalid_argument("rates: beamformer must have unit norm");

        cd gain(0.0, 0.0);
        for (std::size_t i = 0; i < h.size(); ++i)
            gain += std::conj(h.values[i]) * v.values[i];
        const double power = convention == RateConvention::squared ? std::norm(gain) : std::abs(gain);

        Rates out;
        out.rate = std::log2(1.0 + power / noise_var);
        out.eff_rate = (1.0 - std::min(1.0, t_tra / t_tot)) * out.rate;
        return out;
    }

    SampleSummary summarize(std::span<const double> samples)
    {
        SampleSummary s;
        s.count = samples.size();
        if (samples.empty())
            return s;
        double sum = 0.0;
        for (double x : samples)
            sum += x;
        s.mean = sum / double(s.count);
        if (s.count < 2)
            return s;
        double ss = 0.0;
        for (double x : samples)
            ss += (x - s.mean) * (x - s.mean);
        s.std_error = std::sqrt(ss / double(s.count - 1) / double(s.count));
        return s;
    }

} // namespace nfwave
