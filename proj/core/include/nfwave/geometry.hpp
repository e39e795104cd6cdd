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

#ifndef NFWAVE_GEOMETRY_HPP
#define NFWAVE_GEOMETRY_HPP

#include <complex>
#include <cstddef>
#include <limits>
#include <vector>

namespace nfwave
{
    using cd = std::complex<double>;

    inline constexpr double kPi = 3.14159265358979323846;
    inline constexpr double kSpeedOfLight = 299792458.0; // m/s

    // Sentinel distance carried by estimates that fall in the far-field regime
    inline constexpr double kFarField = std::numeric_limits<double>::infinity();
    inline bool is_far_field(double distance) { return distance == kFarField; }

    // Which length is used as the aperture D in every formula.
    // n_minus_1: D = (N-1)d, the physical span between the outermost elements.
    // n:         D = N d, which reproduces the commonly quoted 327.68 m Rayleigh distance.
    enum class ApertureConvention
    {
        n_minus_1,
        n
    };

    // Uniform linear array along the x-axis, centered on the reference antenna.
    class ArrayConfig
    {
    public:
        // Throws std::invalid_argument for non-positive inputs or n_antennas == 0.
        ArrayConfig(std::size_t n_antennas, double carrier_freq, double spacing,
                    ApertureConvention convention = ApertureConvention::n_minus_1,
                    double wave_speed = kSpeedOfLight);

        // d = lambda / 2 at the given carrier
        static ArrayConfig half_wavelength(std::size_t n_antennas, double carrier_freq,
                                           ApertureConvention convention = ApertureConvention::n_minus_1,
                                           double wave_speed = kSpeedOfLight);

        // Convenience for analyses quoted in wavelengths (f_c is derived from lambda)
        static ArrayConfig from_wavelength(std::size_t n_antennas, double wavelength, double spacing,
                                           ApertureConvention convention = ApertureConvention::n_minus_1);

        std::size_t n_antennas() const { return n_; }
        double spacing() const { return spacing_; }
        double carrier_freq() const { return carrier_freq_; }
        double wavelength() const { return wavelength_; }
        double wave_speed() const { return wave_speed_; }
        ApertureConvention aperture_convention() const { return convention_; }

        double aperture() const;                            // D
        double wavenumber() const { return 2.0 * kPi / wavelength_; } // 2 pi / lambda

    private:
        std::size_t n_;
        double carrier_freq_;
        double spacing_;
        double wavelength_;
        double wave_speed_;
        ApertureConvention convention_;
    };

    // Polar user location relative to the array center.
    struct UserState
    {
        double distance = 1.0;        // r0 [m]
        double direction_cosine = 0.0; // Omega = cos(phi), in [-1, 1]
        cd path_gain = 1.0;           // h0

        // Throws std::invalid_argument when distance <= 0 or |Omega| > 1
        void validate() const;
    };

    enum class Domain
    {
        spatial,
        angular,
        wavenumber
    };

    // Sampled complex signal together with the coordinates it is sampled on.
    struct ComplexVector
    {
        std::vector<cd> values;
        std::vector<double> grid; // meters (spatial), direction cosine (angular), rad/m (wavenumber)
        Domain domain = Domain::spatial;

        std::size_t size() const { return values.size(); }
        double norm() const;
    };

    // x_n = d (n - (N+1)/2), n = 1..N
    std::vector<double> antenna_positions(const ArrayConfig &cfg);

    // Distance from the element at x to the user. Throws std::domain_error if the
    // user coincides with the element.
    double element_distance(const UserState &user, double x);

    // b(Omega, r0): spherical-wave steering vector with the 1/sqrt(N) normalization and r0/r_n taper.
    ComplexVector near_steering_vector(const ArrayConfig &cfg, const UserState &user);

    // h_near = sqrt(N) h0 b(Omega, r0)
    ComplexVector spatial_channel(const ArrayConfig &cfg, const UserState &user);

    // h_near(x) on the continuous aperture. Positions outside [-D/2, D/2] are evaluated as-is;
    // use in_aperture() to flag them.
    cd continuous_channel(const ArrayConfig &cfg, const UserState &user, double x);
    bool in_aperture(const ArrayConfig &cfg, double x);

    // a(Omega) = 1/sqrt(N) [1, e^{j k d Omega}, ..., e^{j (N-1) k d Omega}], k = 2 pi / lambda
    ComplexVector far_steering_vector(const ArrayConfig &cfg, double omega);

    // Unit-norm version of b(Omega, r0); used wherever a beamformer is produced.
    ComplexVector near_beamformer(const ArrayConfig &cfg, double omega, double distance);

    double rayleigh_distance(const ArrayConfig &cfg);                        // 2 D^2 / lambda
    double effective_rayleigh_distance(const ArrayConfig &cfg, double omega); // 1.155 D^2 (1 - Omega^2) / lambda

} // namespace nfwave

#endif
