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

#include "nfwave/beam_training.hpp"

#include "nfwave/rng.hpp"
#include "nfwave/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace nfwave
{
    void TrainingConfig::validate() const
    {
        support.validate();
        if (asw_candidates < 1 || asw_candidates % 2 == 0)
            throw std::invalid_argument("TrainingConfig: asw_candidates (K) must be a positive odd integer");
        if (distance_rings < 1)
            throw std::invalid_argument("TrainingConfig: distance_rings must be >= 1");
        if (!(t_tot > 0.0))
            throw std::invalid_argument("TrainingConfig: t_tot must be positive");
        if (!(far_field_margin >= 0.0))
            throw std::invalid_argument("TrainingConfig: far_field_margin must be non-negative");
    }

    ComplexVector SweepMeasurement::angular() const
    {
        ComplexVector out;
        out.domain = Domain::angular;
        out.values = values;
        out.grid.resize(values.size());
        for (std::size_t i = 0; i < values.size(); ++i)
            out.grid[i] = dft_direction_cosine(values.size(), i);
        return out;
    }

    double reference_noise_var(const ArrayConfig &cfg, cd path_gain, double snr_ref_db)
    {
        if (std::isinf(snr_ref_db) && snr_ref_db > 0.0)
            return 0.0;
        return double(cfg.n_antennas()) * std::norm(path_gain) / std::pow(10.0, snr_ref_db / 10.0);
    }

    SweepMeasurement simulate_sweep(const ArrayConfig &cfg, const UserState &user, double snr_ref_db,
                                    std::uint64_t rng_seed)
    {
        const ComplexVector h = spatial_channel(cfg, user);
        const ComplexVector clean = angular_transform(h);

        SweepMeasurement m;
        m.snr_ref_db = snr_ref_db;
        m.noise_var = reference_noise_var(cfg, user.path_gain, snr_ref_db);
        m.values = clean.values;
        if (m.noise_var > 0.0)
        {
            NoiseStream noise(rng_seed);
            for (auto &v : m.values)
                v += noise.draw(m.noise_var);
        }
        return m;
    }

    Codebook polar_codebook(const ArrayConfig &cfg, int rings)
    {
        if (rings < 1)
            throw std::invalid_argument("polar_codebook: rings must be >= 1");
        const std::size_t n = cfg.n_antennas();
        Codebook cb;
        cb.entries.reserve(n * std::size_t(rings + 1));
        for (std::size_t bin = 0; bin < n; ++bin)
        {
            const double omega = dft_direction_cosine(n, bin);
            const double r_max = effective_rayleigh_distance(cfg, omega);
            const double r_min = 0.25 * r_max;
            for (int s = 0; s < rings; ++s)
            {
                const double t = rings == 1 ? 0.0 : double(s) / double(rings - 1);
                const double inv_r = (1.0 - t) / r_min + t / r_max;
                const double r = 1.0 / inv_r;
                cb.entries.push_back({near_beamformer(cfg, omega, r), omega, r});
            }
            cb.entries.push_back({far_steering_vector(cfg, omega), omega, kFarField});
        }
        return cb;
    }

    double far_field_width(const ArrayConfig &cfg, double beta, double margin)
    {
        if (!(beta > 0.0 && beta < 1.0))
            throw std::invalid_argument("far_field_width: beta must lie in (0, 1)");
        // sinc(u) = sin(pi u) / (pi u) decreases monotonically on (0, 1)
        double lo = 0.0, hi = 1.0;
        for (int it = 0; it < 200 && hi - lo > 1e-15; ++it)
        {
            const double mid = 0.5 * (lo + hi);
            const double s = std::sin(kPi * mid) / (kPi * mid);
            (s >= beta ? lo : hi) = mid;
        }
        return (1.0 + margin) * 2.0 * lo * dft_sample_step(cfg);
    }

    namespace
    {
        std::size_t strongest_beam(const std::vector<cd> &values)
        {
            std::size_t best = 0;
            for (std::size_t i = 1; i < values.size(); ++i)
                if (std::abs(values[i]) > std::abs(values[best]))
                    best = i;
            return best;
        }

        TrainingResult strongest_beam_fallback(const SweepMeasurement &sweep, const ArrayConfig &cfg,
                                               std::string scheme, std::size_t t_train)
        {
            TrainingResult r;
            r.scheme = std::move(scheme);
            r.omega_hat = dft_direction_cosine(sweep.values.size(), strongest_beam(sweep.values));
            r.r_hat = kFarField;
            r.beamformer = far_steering_vector(cfg, r.omega_hat);
            r.t_train = t_train;
            r.fallback = true;
            return r;
        }

        UserEstimate estimate_with_far_test(const WaveInterval &interval, const ArrayConfig &cfg,
                                            const TrainingConfig &tcfg)
        {
            UserEstimate est = estimate_user(interval, cfg);
            if (interval.width() < far_field_width(cfg, tcfg.support.beta, tcfg.far_field_margin))
                est.distance = kFarField;
            return est;
        }

        void check_sweep(const SweepMeasurement &sweep, const ArrayConfig &cfg)
        {
            if (sweep.values.size() != cfg.n_antennas())
                throw std::invalid_argument("beam training: sweep length does not match the array size");
        }
    } // namespace

    TrainingResult wdsw_je(const SweepMeasurement &sweep, const ArrayConfig &cfg, const TrainingConfig &tcfg)
    {
        tcfg.validate();
        check_sweep(sweep, cfg);
        const std::size_t t_train = cfg.n_antennas();

        SupportEstimate support;
        try
        {
            support = support_from_angular(sweep.angular(), cfg, tcfg.support);
        }
        catch (const std::domain_error &)
        {
            return strongest_beam_fallback(sweep, cfg, "wdsw_je", t_train);
        }

        const UserEstimate est = estimate_with_far_test(support.interval, cfg, tcfg);
        TrainingResult r;
        r.scheme = "wdsw_je";
        r.omega_hat = est.omega;
        r.r_hat = est.distance;
        r.beamformer = near_beamformer(cfg, est.omega, est.distance);
        r.t_train = t_train;
        return r;
    }

    TrainingResult asw_je(const SweepMeasurement &sweep, const ArrayConfig &cfg, const ComplexVector &channel,
                          const TrainingConfig &tcfg, std::uint64_t rng_seed)
    {
        tcfg.validate();
        check_sweep(sweep, cfg);
        if (channel.size() != cfg.n_antennas())
            throw std::invalid_argument("asw_je: channel length does not match the array size");
        const std::size_t n = cfg.n_antennas();
        const std::size_t k_count = std::size_t(tcfg.asw_candidates);
        const std::size_t t_train = n + k_count;

        std::vector<double> mag(n);
        for (std::size_t i = 0; i < n; ++i)
            mag[i] = std::abs(sweep.values[i]);
        PeakRun run;
        try
        {
            run = peak_run(mag, tcfg.support.beta);
        }
        catch (const std::domain_error &)
        {
            return strongest_beam_fallback(sweep, cfg, "asw_je", t_train);
        }

        // bin edges of the run on the k_x axis
        const WaveGrid bins = WaveGrid::dft_samples(cfg);
        const double half = 0.5 * bins.sample_step;
        const double k0 = cfg.wavenumber();
        const WaveInterval interval{std::clamp(bins.points[run.first] - half, -k0, k0),
                                    std::clamp(bins.points[run.last] + half, -k0, k0)};
        const UserEstimate est = estimate_with_far_test(interval, cfg, tcfg);

        // center bin: grid direction nearest to the estimate
        std::size_t center = 0;
        for (std::size_t i = 1; i < n; ++i)
            if (std::abs(dft_direction_cosine(n, i) - est.omega) < std::abs(dft_direction_cosine(n, center) - est.omega))
                center = i;

        NoiseStream noise(rng_seed);
        const long reach = long(k_count / 2);
        TrainingResult best;
        double best_power = -1.0;
        for (long off = -reach; off <= reach; ++off)
        {
            const long idx = long(center) + off;
            if (idx < 0 || idx >= long(n))
            {
                noise.draw(0.0); // keep the stream aligned with the candidate count
                continue;
            }
            const double omega = dft_direction_cosine(n, std::size_t(idx));
            ComplexVector v = near_beamformer(cfg, omega, est.distance);
            cd y(0.0, 0.0);
            for (std::size_t i = 0; i < n; ++i)
                y += std::conj(v.values[i]) * channel.values[i];
            y += noise.draw(sweep.noise_var);
            const double power = std::norm(y);
            if (power > best_power)
            {
                best_power = power;
                best.omega_hat = omega;
                best.beamformer = std::move(v);
            }
        }
        best.scheme = "asw_je";
        best.r_hat = est.distance;
        best.t_train = t_train;
        return best;
    }

    TrainingResult exhaustive_search(const ArrayConfig &cfg, const UserState &user, const Codebook &codebook,
                                     double snr_ref_db, std::uint64_t rng_seed)
    {
        if (codebook.entries.empty())
            throw std::invalid_argument("exhaustive_search: empty codebook");
        const ComplexVector h = spatial_channel(cfg, user);
        const double noise_var = reference_noise_var(cfg, user.path_gain, snr_ref_db);
        NoiseStream noise(rng_seed);

        std::size_t best = 0;
        double best_power = -1.0;
        for (std::size_t e = 0; e < codebook.size(); ++e)
        {
            const auto &v = codebook.entries[e].beamformer;
            if (v.size() != h.size())
                throw std::invalid_argument("exhaustive_search: codeword length does not match the array size");
            cd y(0.0, 0.0);
            for (std::size_t i = 0; i < h.size(); ++i)
                y += std::conj(v.values[i]) * h.values[i];
            if (noise_var > 0.0)
                y += noise.draw(noise_var);
            const double power = std::norm(y);
            if (power > best_power)
            {
                best_power = power;
                best = e;
            }
        }

        TrainingResult r;
        r.scheme = "exhaustive";
        r.omega_hat = codebook.entries[best].omega;
        r.r_hat = codebook.entries[best].distance;
        r.beamformer = codebook.entries[best].beamformer;
        r.t_train = codebook.size();
        return r;
    }

    TrainingResult perfect_csi(const ArrayConfig &cfg, const UserState &user)
    {
        user.validate();
        TrainingResult r;
        r.scheme = "perfect_csi";
        r.omega_hat = user.direction_cosine;
        r.r_hat = user.distance;
        r.beamformer = near_beamformer(cfg, user.direction_cosine, user.distance);
        r.t_train = 0;
        return r;
    }

    void score(TrainingResult &result, const ComplexVector &channel, double noise_var, const TrainingConfig &tcfg)
    {
        const Rates r = rates(channel, result.beamformer, noise_var, double(result.t_train), tcfg.t_tot,
                              tcfg.rate_convention);
        result.rate = r.rate;
        result.eff_rate = r.eff_rate;
    }

} // namespace nfwave
