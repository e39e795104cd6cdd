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

#include "nfwave/posp.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace nfwave
{
    PhasePair channel_phase_pair(const ArrayConfig &cfg, const UserState &user, double k_x)
    {
        user.validate();
        const double k0 = cfg.wavenumber();
        const double r0 = user.distance;
        const double omega = user.direction_cosine;
        // r^2 = (x - r0 Omega)^2 + r0^2 (1 - Omega^2)
        const double across2 = r0 * r0 * (1.0 - omega * omega);

        PhasePair p;
        p.amplitude_at = [user](double x) { return user.distance / element_distance(user, x); };
        p.phase_at = [user, k0, k_x](double x) {
            return -k_x * x + k0 * (user.distance - element_distance(user, x));
        };
        p.phase_d1_at = [user, k0, k_x, r0, omega](double x) {
            return -k_x - k0 * (x - r0 * omega) / element_distance(user, x);
        };
        p.phase_d2_at = [user, k0, across2](double x) {
            const double r = element_distance(user, x);
            return -k0 * across2 / (r * r * r);
        };
        return p;
    }

    double stationary_point(const ArrayConfig &cfg, const UserState &user, double k_x)
    {
        user.validate();
        const double k0 = cfg.wavenumber();
        const double radicand = k0 * k0 - k_x * k_x;
        if (!(radicand > 0.0))
            throw std::domain_error("stationary_point: |k_x| = " + std::to_string(std::abs(k_x)) +
                                    " is not inside the visible band");
        const double omega = user.direction_cosine;
        return user.distance * (omega - k_x / std::sqrt(radicand) * std::sqrt(1.0 - omega * omega));
    }

    cd posp_value(const PhasePair &pair, double x_s, double min_curvature)
    {
        const double curvature = pair.phase_d2_at(x_s);
        if (!std::isfinite(curvature) || std::abs(curvature) <= min_curvature)
            throw std::domain_error("posp_value: degenerate stationary point (psi'' = " +
                                    std::to_string(curvature) + ")");
        const double magnitude = std::sqrt(2.0 * kPi / std::abs(curvature)) * pair.amplitude_at(x_s);
        const double sign = curvature > 0.0 ? 1.0 : -1.0;
        return std::polar(magnitude, pair.phase_at(x_s) + sign * 0.25 * kPi);
    }

    double degenerate_curvature(const ArrayConfig &cfg)
    {
        return 1e-12 * cfg.wavenumber() / cfg.aperture();
    }

    WaveInterval diffusion_interval(const ArrayConfig &cfg, const UserState &user)
    {
        user.validate();
        const double k0 = cfg.wavenumber();
        const double omega = user.direction_cosine;
        const double a = cfg.aperture() / (2.0 * user.distance);
        WaveInterval iv;
        iv.lower = k0 * (omega - a) / std::sqrt(1.0 + a * a - 2.0 * a * omega);
        iv.upper = k0 * (omega + a) / std::sqrt(1.0 + a * a + 2.0 * a * omega);
        iv.lower = std::clamp(iv.lower, -k0, k0);
        iv.upper = std::clamp(iv.upper, -k0, k0);
        return iv;
    }

    WaveInterval simplified_interval(const ArrayConfig &cfg, const UserState &user)
    {
        user.validate();
        const double k0 = cfg.wavenumber();
        const double omega = user.direction_cosine;
        const double spread = cfg.aperture() / (2.0 * user.distance) * (1.0 - omega * omega);
        return WaveInterval{k0 * (omega - spread), k0 * (omega + spread)};
    }

    ComplexSpectrum approx_spectrum(const ArrayConfig &cfg, const UserState &user, const WaveGrid &grid)
    {
        const WaveInterval support = diffusion_interval(cfg, user);
        const double threshold = degenerate_curvature(cfg);

        ComplexSpectrum out;
        out.grid = grid;
        out.provenance = Provenance::posp;
        out.values.assign(grid.size(), cd(0.0, 0.0));
        for (std::size_t i = 0; i < grid.size(); ++i)
        {
            const double k = grid.points[i];
            if (!support.contains(k))
                continue;
            const double xs = stationary_point(cfg, user, k);
            out.values[i] = user.path_gain * posp_value(channel_phase_pair(cfg, user, k), xs, threshold);
        }
        return out;
    }

    double farfield_lobe_width(const ArrayConfig &cfg)
    {
        return 0.866 * 2.0 * kPi / cfg.aperture();
    }

    UserEstimate estimate_user(const WaveInterval &interval, const ArrayConfig &cfg)
    {
        if (!(interval.upper >= interval.lower))
            throw std::invalid_argument("estimate_user: interval upper bound is below its lower bound");
        UserEstimate est;
        est.omega = std::clamp(cfg.wavelength() / (4.0 * kPi) * (interval.lower + interval.upper), -1.0, 1.0);
        const double width = interval.width();
        if (width <= 0.0 || width < farfield_lobe_width(cfg))
            return est;
        est.distance = 2.0 * kPi * cfg.aperture() / cfg.wavelength() * (1.0 - est.omega * est.omega) / width;
        if (!(est.distance > 0.0)) // |Omega| clamped to 1: no range information left
            est.distance = kFarField;
        return est;
    }

} // namespace nfwave
