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

#ifndef NFWAVE_SPECTRAL_HPP
#define NFWAVE_SPECTRAL_HPP

#include "nfwave/geometry.hpp"

#include <stdexcept>
#include <vector>

namespace nfwave
{
    // Wave-number evaluation points k_x [rad/m].
    struct WaveGrid
    {
        std::vector<double> points; // strictly increasing
        double band_limit = 0.0;    // 2 pi / lambda
        double sample_step = 0.0;   // DFT bin spacing 2 pi / (N d), i.e. 4 pi / (lambda N) at d = lambda/2

        std::size_t size() const { return points.size(); }

        // Throws std::invalid_argument if points are not strictly increasing or leave the band.
        void validate() const;

        // Symmetric grid with spacing sample_step / oversample covering
        // |k_x| <= band_fraction * 2 pi / lambda. Always contains k_x = 0.
        static WaveGrid oversampled(const ArrayConfig &cfg, int oversample = 16, double band_fraction = 1.0);

        // The N DFT sampling positions k_{x,n} = (pi / d) (2n - N - 1) / N. For d < lambda/2 some
        // of these lie outside the band and validate() will reject them.
        static WaveGrid dft_samples(const ArrayConfig &cfg);

        // Arbitrary points; band limit and step are taken from cfg.
        static WaveGrid from_points(const ArrayConfig &cfg, std::vector<double> points);
    };

    enum class Provenance
    {
        quadrature,
        interpolated,
        posp,
        farfield
    };

    struct ComplexSpectrum
    {
        std::vector<cd> values;
        WaveGrid grid;
        Provenance provenance = Provenance::quadrature;

        std::size_t size() const { return values.size(); }
        std::vector<double> magnitudes() const;
    };

    // DFT grid helpers (0-based bin index i = n - 1)
    double dft_direction_cosine(std::size_t n_antennas, std::size_t bin); // (2i + 1 - N) / N
    double dft_sample_step(const ArrayConfig &cfg);                       // 2 pi / (N d)

    // Entry n is a^H(Omega_n) h with Omega_n = (2n - N - 1)/N, evaluated as the unitary DFT
    // (the far-field codebook at half-wavelength spacing). Output grid holds Omega_n.
    ComplexVector angular_transform(const ComplexVector &spatial);

    // Adjoint of angular_transform. Output grid holds the antenna positions of cfg.
    ComplexVector inverse_angular_transform(const ComplexVector &angular, const ArrayConfig &cfg);

    struct QuadratureOptions
    {
        double rel_tol = 1e-6;
        double phase_step = kPi / 8.0; // max integrand phase advance per base step [rad]
        int min_levels = 2;            // step halvings always performed
        int max_levels = 12;
        unsigned threads = 1;
    };

    class QuadratureError : public std::runtime_error
    {
    public:
        QuadratureError(double k_x, double achieved_error);
        double k_x() const { return k_x_; }
        double achieved_error() const { return achieved_; }

    private:
        double k_x_;
        double achieved_;
    };

    // Numerical Fourier integral of h_near(x) over [-D/2, D/2] at every grid point.
    // Romberg step halving on a base grid whose step keeps the integrand phase advance below
    // phase_step; stops once the extrapolated value changes by less than rel_tol (relative to
    // max(|H|, 1e-4 * ||h||_1)). Results do not depend on the thread count.
    ComplexSpectrum wavenumber_quadrature(const ArrayConfig &cfg, const UserState &user, const WaveGrid &grid,
                                          const QuadratureOptions &opts = {});

    // 2 sin((D/2) u) / u with u = k_x - (2 pi / lambda) Omega, equal to D at u = 0.
    ComplexSpectrum farfield_spectrum(const ArrayConfig &cfg, double omega, const WaveGrid &grid);

    // Band-limited reconstruction of H_near(k_x) from the angular samples:
    //   H(k_x) = sum_n G_n sinc((k_x - k_{x,n}) / Delta),  G_n = d sqrt(N) e^{j k_{x,n} d (N-1)/2} H_A[n mod N]
    // The sqrt(N) and phase factor convert the first-element-referenced unitary DFT into samples
    // of the centered Fourier integral. The sum runs over `periods` * N terms around each query.
    ComplexSpectrum sinc_interpolate(const ComplexVector &angular, const ArrayConfig &cfg, const WaveGrid &query,
                                     int periods = 3);

} // namespace nfwave

#endif
