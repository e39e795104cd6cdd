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

#include "nfwave/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace nfwave
{
    void WaveGrid::validate() const
    {
        if (!(band_limit > 0.0))
            throw std::invalid_argument("WaveGrid: band_limit must be positive");
        const double slack = band_limit * 1e-12;
        for (std::size_t i = 0; i < points.size(); ++i)
        {
            if (std::abs(points[i]) > band_limit + slack)
                throw std::invalid_argument("WaveGrid: point " + std::to_string(points[i]) +
                                            " lies outside the visible band");
            if (i > 0 && !(points[i] > points[i - 1]))
                throw std::invalid_argument("WaveGrid: points must be strictly increasing");
        }
    }

    WaveGrid WaveGrid::oversampled(const ArrayConfig &cfg, int oversample, double band_fraction)
    {
        if (oversample < 1)
            throw std::invalid_argument("WaveGrid::oversampled: oversample must be >= 1");
        if (!(band_fraction > 0.0 && band_fraction <= 1.0))
            throw std::invalid_argument("WaveGrid::oversampled: band_fraction must be in (0, 1]");

        WaveGrid g;
        g.band_limit = cfg.wavenumber();
        g.sample_step = dft_sample_step(cfg);
        const double step = g.sample_step / double(oversample);
        const double edge = band_fraction * g.band_limit;
        const auto half = static_cast<long>(std::floor(edge / step + 1e-9));
        g.points.reserve(std::size_t(2 * half + 1));
        for (long i = -half; i <= half; ++i)
            g.points.push_back(std::clamp(double(i) * step, -edge, edge));
        return g;
    }

    WaveGrid WaveGrid::dft_samples(const ArrayConfig &cfg)
    {
        WaveGrid g;
        g.band_limit = cfg.wavenumber();
        g.sample_step = dft_sample_step(cfg);
        const std::size_t n = cfg.n_antennas();
        g.points.resize(n);
        for (std::size_t i = 0; i < n; ++i)
            g.points[i] = kPi * dft_direction_cosine(n, i) / cfg.spacing();
        return g;
    }

    WaveGrid WaveGrid::from_points(const ArrayConfig &cfg, std::vector<double> points)
    {
        WaveGrid g;
        g.band_limit = cfg.wavenumber();
        g.sample_step = dft_sample_step(cfg);
        g.points = std::move(points);
        g.validate();
        return g;
    }

    std::vector<double> ComplexSpectrum::magnitudes() const
    {
        std::vector<double> m(values.size());
        std::transform(values.begin(), values.end(), m.begin(), [](const cd &v) { return std::abs(v); });
        return m;
    }

    double dft_direction_cosine(std::size_t n_antennas, std::size_t bin)
    {
        const double n = double(n_antennas);
        return (2.0 * double(bin) + 1.0 - n) / n;
    }

    double dft_sample_step(const ArrayConfig &cfg)
    {
        return 2.0 * kPi / (double(cfg.n_antennas()) * cfg.spacing());
    }

    ComplexVector angular_transform(const ComplexVector &spatial)
    {
        if (spatial.domain != Domain::spatial)
            throw std::invalid_argument("angular_transform: input must be a spatial-domain vector");
        const std::size_t n = spatial.size();
        if (n == 0)
            throw std::invalid_argument("angular_transform: empty input");

        ComplexVector out;
        out.domain = Domain::angular;
        out.grid.resize(n);
        out.values.assign(n, cd(0.0, 0.0));
        const double scale = 1.0 / std::sqrt(double(n));
        for (std::size_t bin = 0; bin < n; ++bin)
        {
            const double omega = dft_direction_cosine(n, bin);
            out.grid[bin] = omega;
            cd acc(0.0, 0.0);
            for (std::size_t m = 0; m < n; ++m)
                acc += std::polar(scale, -kPi * omega * double(m)) * spatial.values[m];
            out.values[bin] = acc;
        }
        return out;
    }

    ComplexVector inverse_angular_transform(const ComplexVector &angular, const ArrayConfig &cfg)
    {
        if (angular.domain != Domain::angular)
            throw std::invalid_argument("inverse_angular_transform: input must be an angular-domain vector");
        const std::size_t n = angular.size();
        if (n != cfg.n_antennas())
            throw std::invalid_argument("inverse_angular_transform: size does not match the array");

        ComplexVector out;
        out.domain = Domain::spatial;
        out.grid = antenna_positions(cfg);
        out.values.assign(n, cd(0.0, 0.0));
        const double scale = 1.0 / std::sqrt(double(n));
        for (std::size_t m = 0; m < n; ++m)
        {
            cd acc(0.0, 0.0);
            for (std::size_t bin = 0; bin < n; ++bin)
                acc += std::polar(scale, kPi * dft_direction_cosine(n, bin) * double(m)) * angular.values[bin];
            out.values[m] = acc;
        }
        return out;
    }

    ComplexSpectrum farfield_spectrum(const ArrayConfig &cfg, double omega, const WaveGrid &grid)
    {
        if (!(std::abs(omega) <= 1.0))
            throw std::invalid_argument("farfield_spectrum: |omega| must not exceed 1");
        const double aperture = cfg.aperture();
        const double center = cfg.wavenumber() * omega;

        ComplexSpectrum out;
        out.grid = grid;
        out.provenance = Provenance::farfield;
        out.values.resize(grid.size());
        for (std::size_t i = 0; i < grid.size(); ++i)
        {
            const double u = grid.points[i] - center;
            const double half = 0.5 * aperture * u;
            // 2 sin(half)/u = D sin(half)/half; series below the cancellation threshold
            const double value = std::abs(half) < 1e-6 ? aperture * (1.0 - half * half / 6.0)
                                                       : 2.0 * std::sin(half) / u;
            out.values[i] = cd(value, 0.0);
        }
        return out;
    }

    ComplexSpectrum sinc_interpolate(const ComplexVector &angular, const ArrayConfig &cfg, const WaveGrid &query,
                                     int periods)
    {
        const std::size_t n = cfg.n_antennas();
        if (angular.size() != n)
            throw std::invalid_argument("sinc_interpolate: angular vector must have N entries");
        if (periods < 1)
            throw std::invalid_argument("sinc_interpolate: periods must be >= 1");

        ComplexSpectrum out;
        out.grid = query;
        out.provenance = Provenance::interpolated;
        out.values.assign(query.size(), cd(0.0, 0.0));
        if (query.size() == 0)
            return out;

        const double d = cfg.spacing();
        const double step = dft_sample_step(cfg);
        const double center = 0.5 * (double(n) + 1.0); // k_{x,n} = step * (n - center), n 1-based
        const double gain = d * std::sqrt(double(n));
        const long nn = long(n);
        const long terms = long(periods) * nn;

        // query position in units of the sample index: t = k_x / step + center
        const auto position = [&](double k) { return k / step + center; };
        const long lo = std::lround(position(query.points.front())) - terms / 2;
        const long hi = std::lround(position(query.points.back())) - terms / 2 + terms;

        // weighted samples G_idx of the periodically extended angular vector
        std::vector<cd> weighted(std::size_t(hi - lo));
        for (long idx = lo; idx < hi; ++idx)
        {
            const double k_sample = step * (double(idx) - center);
            const long wrapped = ((idx - 1) % nn + nn) % nn;
            weighted[std::size_t(idx - lo)] =
                angular.values[std::size_t(wrapped)] * std::polar(gain, k_sample * d * 0.5 * double(n - 1));
        }

        for (std::size_t q = 0; q < query.size(); ++q)
        {
            const double t = position(query.points[q]);
            const long nearest = std::lround(t);
            const double frac = t - double(nearest);
            // sinc(t - idx) = (-1)^(nearest - idx) sin(pi frac) / (pi (t - idx))
            const double s = std::sin(kPi * frac) / kPi;
            const long first = nearest - terms / 2;
            cd acc(0.0, 0.0);
            for (long idx = first; idx < first + terms; ++idx)
            {
                const cd &g = weighted[std::size_t(idx - lo)];
                if (idx == nearest)
                {
                    acc += frac == 0.0 ? g : g * (s / frac);
                    continue;
                }
                const double sign = ((nearest - idx) & 1) ? -1.0 : 1.0;
                acc += g * (sign * s / (t - double(idx)));
            }
            out.values[q] = acc;
        }
        return out;
    }

} // namespace nfwave
