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

#ifndef NFWAVE_POSP_HPP
#define NFWAVE_POSP_HPP

#include "nfwave/geometry.hpp"
#include "nfwave/spectral.hpp"

#include <functional>

namespace nfwave
{
    // Amplitude and phase of an oscillatory integrand A(x) exp(j psi(x)), with the phase
    // derivatives needed by the stationary-phase estimate.
    struct PhasePair
    {
        std::function<double(double)> amplitude_at;
        std::function<double(double)> phase_at;
        std::function<double(double)> phase_d1_at;
        std::function<double(double)> phase_d2_at;
    };

    // Closed interval [lower, upper] on the k_x axis [rad/m]
    struct WaveInterval
    {
        double lower = 0.0;
        double upper = 0.0;

        double width() const { return upper - lower; }
        double center() const { return 0.5 * (lower + upper); }
        bool contains(double k) const { return k >= lower && k <= upper; }
    };

    // A(x) = r0 / r(x),  psi(x) = -k_x x + (2 pi / lambda) (r0 - r(x)), derivatives analytic.
    PhasePair channel_phase_pair(const ArrayConfig &cfg, const UserState &user, double k_x);

    // x_s = r0 [Omega - k_x / sqrt((2 pi / lambda)^2 - k_x^2) sqrt(1 - Omega^2)].
    // Throws std::domain_error when |k_x| >= 2 pi / lambda.
    double stationary_point(const ArrayConfig &cfg, const UserState &user, double k_x);

    // sqrt(2 pi / |psi''|) A exp(j [psi + sgn(psi'') pi / 4]) at x_s. Throws std::domain_error when
    // |psi''(x_s)| <= min_curvature (degenerate stationary point) or is not finite.
    cd posp_value(const PhasePair &pair, double x_s, double min_curvature = 0.0);

    // Curvature threshold used by approx_spectrum: 1e-12 (2 pi / lambda) / D
    double degenerate_curvature(const ArrayConfig &cfg);

    // k_x range whose stationary point lies on the aperture, clamped to the visible band.
    WaveInterval diffusion_interval(const ArrayConfig &cfg, const UserState &user);

    // First-order expansion in D / r0: (2 pi / lambda) [Omega -/+ (D / 2 r0)(1 - Omega^2)]
    WaveInterval simplified_interval(const ArrayConfig &cfg, const UserState &user);

    // Stationary-phase spectrum: posp_value inside diffusion_interval, exactly zero outside.
    ComplexSpectrum approx_spectrum(const ArrayConfig &cfg, const UserState &user, const WaveGrid &grid);

    // Main-lobe 3 dB width of the far-field spectrum, 0.866 * 2 pi / D
    double farfield_lobe_width(const ArrayConfig &cfg);

    struct UserEstimate
    {
        double omega = 0.0;
        double distance = kFarField; // kFarField when the interval is too narrow to resolve range

        bool far_field() const { return is_far_field(distance); }
    };

    // Inverts the simplified interval: Omega = (lambda / 4 pi)(k_l + k_r),
    // r0 = (2 pi D / lambda)(1 - Omega^2) / (k_r - k_l). Omega is clamped to [-1, 1]. Intervals
    // narrower than farfield_lobe_width() yield the far-field verdict.
    UserEstimate estimate_user(const WaveInterval &interval, const ArrayConfig &cfg);

} // namespace nfwave

#endif
