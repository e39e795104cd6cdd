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

#ifndef NFWAVE_BEAM_TRAINING_HPP
#define NFWAVE_BEAM_TRAINING_HPP

#include "nfwave/geometry.hpp"
#include "nfwave/metrics.hpp"
#include "nfwave/posp.hpp"
#include "nfwave/support.hpp"

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace nfwave
{
    struct TrainingConfig
    {
        SupportConfig support;             // beta also drives the ASW-JE angular threshold
        int asw_candidates = 3;            // K, odd
        int distance_rings = 8;            // S, near-field rings per angle in the polar codebook
        double t_tot = 2000.0;             // symbols per frame
        double far_field_margin = 0.1;     // see far_field_width()
        RateConvention rate_convention = RateConvention::squared;

        void validate() const;
    };

    // Received far-field sweep: values[n] = a^H(Omega_n) h + w_n, w_n ~ CN(0, noise_var)
    struct SweepMeasurement
    {
        std::vector<cd> values;
        double noise_var = 0.0;
        double snr_ref_db = 0.0;

        ComplexVector angular() const; // values on the Omega_n grid, angular domain
    };

    // Reference SNR is the post-beamforming SNR of a perfectly matched beam: N |h0|^2 / sigma^2.
    // +inf dB gives sigma^2 = 0.
    double reference_noise_var(const ArrayConfig &cfg, cd path_gain, double snr_ref_db);

    SweepMeasurement simulate_sweep(const ArrayConfig &cfg, const UserState &user, double snr_ref_db,
                                    std::uint64_t rng_seed);

    struct CodebookEntry
    {
        ComplexVector beamformer; // unit norm
        double omega = 0.0;
        double distance = kFarField;
    };

    struct Codebook
    {
        std::vector<CodebookEntry> entries;
        std::size_t size() const { return entries.size(); }
    };

    // Polar-domain codebook: every DFT direction Omega_n gets `rings` near-field codewords, uniform in
    // 1/r between r_eff(Omega_n) / 4 and r_eff(Omega_n) = 1.155 D^2 (1 - Omega_n^2) / lambda, plus one
    // plane-wave codeword.
    Codebook polar_codebook(const ArrayConfig &cfg, int rings = 8);

    struct TrainingResult
    {
        std::string scheme;
        double omega_hat = 0.0;
        double r_hat = kFarField;
        ComplexVector beamformer;
        std::size_t t_train = 0;
        double rate = 0.0;
        double eff_rate = 0.0;
        bool fallback = false; // support extraction failed; strongest far-field beam used
    };

    // Width below which a measured support is indistinguishable from a far-field main lobe at the
    // given threshold: (1 + margin) * 2 u_beta * 2 pi / (N d), with sinc(u_beta) = beta.
    double far_field_width(const ArrayConfig &cfg, double beta, double margin);

    // Oversampled wave-number support -> range/angle inversion -> b(Omega, r0). T_tra = N.
    TrainingResult wdsw_je(const SweepMeasurement &sweep, const ArrayConfig &cfg, const TrainingConfig &tcfg);

    // Grid-quantized support on the DFT beams, then K candidate angles around the center bin are
    // re-measured with near-field codewords against `channel` using fresh noise. T_tra = N + K.
    TrainingResult asw_je(const SweepMeasurement &sweep, const ArrayConfig &cfg, const ComplexVector &channel,
                          const TrainingConfig &tcfg, std::uint64_t rng_seed);

    // Measures every codeword with independent noise and keeps the strongest. T_tra = |codebook|.
    TrainingResult exhaustive_search(const ArrayConfig &cfg, const UserState &user, const Codebook &codebook,
                                     double snr_ref_db, std::uint64_t rng_seed);

    // Matched near-field beam at the true location. T_tra = 0.
    TrainingResult perfect_csi(const ArrayConfig &cfg, const UserState &user);

    // Fills rate and eff_rate for the result's beamformer against the true channel.
    void score(TrainingResult &result, const ComplexVector &channel, double noise_var, const TrainingConfig &tcfg);

} // namespace nfwave

#endif
