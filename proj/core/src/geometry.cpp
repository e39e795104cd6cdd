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

#include "nfwave/geometry.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace nfwave
{
    ArrayConfig::ArrayConfig(std::size_t n_antennas, double carrier_freq, double spacing,
                             ApertureConvention convention, double wave_speed)
        : n_(n_antennas), carrier_freq_(carrier_freq), spacing_(spacing), wavelength_(0.0),
          wave_speed_(wave_speed), convention_(convention)
    {
        if (n_antennas == 0)
            throw std::invalid_argument("ArrayConfig: n_antennas must be positive");
        if (!(carrier_freq > 0.0) || !std::isfinite(carrier_freq))
            throw std::invalid_argument("ArrayConfig: carrier_freq must be positive and finite");
        if (!(spacing > 0.0) || !std::isfinite(spacing))
            throw std::invalid_argument("ArrayConfig: spacing must be positive and finite");
        if (!(wave_speed > 0.0) || !std::isfinite(wave_speed))
            throw std::invalid_argument("ArrayConfig: wave_speed must be positive and finite");
        wavelength_ = wave_speed / carrier_freq;
    }

    ArrayConfig ArrayConfig::half_wavelength(std::size_t n_antennas, double carrier_freq,
                                             ApertureConvention convention, double wave_speed)
    {
        if (!(carrier_freq > 0.0))
            throw std::invalid_argument("ArrayConfig: carrier_freq must be positive");
        return ArrayConfig(n_antennas, carrier_freq, 0.5 * wave_speed / carrier_freq, convention, wave_speed);
    }

    ArrayConfig ArrayConfig::from_wavelength(std::size_t n_antennas, double wavelength, double spacing,
                                             ApertureConvention convention)
    {
        if (!(wavelength > 0.0))
            throw std::invalid_argument("ArrayConfig: wavelength must be positive");
        ArrayConfig cfg(n_antennas, kSpeedOfLight / wavelength, spacing, convention);
        cfg.wavelength_ = wavelength; // keep the caller's value bit-exact
        return cfg;
    }

    double ArrayConfig::aperture() const
    {
        const double count = convention_ == ApertureConvention::n ? double(n_) : double(n_) - 1.0;
        return count * spacing_;
    }

    void UserState::validate() const
    {
        if (!(distance > 0.0) || !std::isfinite(distance))
            throw std::invalid_argument("UserState: distance must be positive and finite, got " +
                                        std::to_string(distance));
        if (!(std::abs(direction_cosine) <= 1.0))
            throw std::invalid_argument("UserState: |direction_cosine| must not exceed 1, got " +
                                        std::to_string(direction_cosine));
    }

    double ComplexVector::norm() const
    {
        double acc = 0.0;
        for (const auto &v : values)
            acc += std::norm(v);
        return std::sqrt(acc);
    }

    std::vector<double> antenna_positions(const ArrayConfig &cfg)
    {
        const std::size_t n = cfg.n_antennas();
        const double center = 0.5 * (double(n) + 1.0);
        std::vector<double> x(n);
        for (std::size_t i = 0; i < n; ++i)
            x[i] = cfg.spacing() * (double(i + 1) - center);
        return x;
    }

    double element_distance(const UserState &user, double x)
    {
        user.validate();
        const double r0 = user.distance;
        const double omega = user.direction_cosine;
        // r0^2 + x^2 - 2 r0 x Omega written as a sum of squares so it never goes negative
        const double along = x - r0 * omega;
        const double across2 = r0 * r0 * (1.0 - omega * omega);
        const double r = std::sqrt(along * along + across2);
        if (r == 0.0)
            throw std::domain_error("element_distance: user coincides with the antenna at x = " +
                                    std::to_string(x));
        return r;
    }

    namespace
    {
        // h_near(x) / h0
        cd unit_gain_response(double wavenumber, const UserState &user, double x)
        {
            const double r = element_distance(user, x);
            const double amp = user.distance / r;
            return std::polar(amp, -wavenumber * (r - user.distance));
        }
    } // namespace

    ComplexVector near_steering_vector(const ArrayConfig &cfg, const UserState &user)
    {
        user.validate();
        const auto x = antenna_positions(cfg);
        const double scale = 1.0 / std::sqrt(double(cfg.n_antennas()));
        ComplexVector out;
        out.domain = Domain::spatial;
        out.grid = x;
        out.values.resize(x.size());
        for (std::size_t i = 0; i < x.size(); ++i)
            out.values[i] = scale * unit_gain_response(cfg.wavenumber(), user, x[i]);
        return out;
    }

    ComplexVector spatial_channel(const ArrayConfig &cfg, const UserState &user)
    {
        auto out = near_steering_vector(cfg, user);
        const cd factor = std::sqrt(double(cfg.n_antennas())) * user.path_gain;
        for (auto &v : out.values)
            v *= factor;
        return out;
    }

    cd continuous_channel(const ArrayConfig &cfg, const UserState &user, double x)
    {
        return user.path_gain * unit_gain_response(cfg.wavenumber(), user, x);
    }

    bool in_aperture(const ArrayConfig &cfg, double x)
    {
        return std::abs(x) <= 0.5 * cfg.aperture();
    }

    ComplexVector far_steering_vector(const ArrayConfig &cfg, double omega)
    {
        if (!(std::abs(omega) <= 1.0))
            throw std::invalid_argument("far_steering_vector: |omega| must not exceed 1");
        const std::size_t n = cfg.n_antennas();
        const double step = cfg.wavenumber() * cfg.spacing() * omega; // pi * Omega at d = lambda/2
        const double scale = 1.0 / std::sqrt(double(n));
        ComplexVector out;
        out.domain = Domain::spatial;
        out.grid = antenna_positions(cfg);
        out.values.resize(n);
        for (std::size_t i = 0; i < n; ++i)
            out.values[i] = std::polar(scale, step * double(i));
        return out;
    }

    ComplexVector near_beamformer(const ArrayConfig &cfg, double omega, double distance)
    {
        if (is_far_field(distance))
            return far_steering_vector(cfg, omega);
        auto b = near_steering_vector(cfg, UserState{distance, omega, 1.0});
        const double nrm = b.norm();
        for (auto &v : b.values)
            v /= nrm;
        return b;
    }

    double rayleigh_distance(const ArrayConfig &cfg)
    {
        const double d = cfg.aperture();
        return 2.0 * d * d / cfg.wavelength();
    }

    double effective_rayleigh_distance(const ArrayConfig &cfg, double omega)
    {
        const double d = cfg.aperture();
        return 1.155 * d * d * (1.0 - omega * omega) / cfg.wavelength();
    }

} // namespace nfwave
