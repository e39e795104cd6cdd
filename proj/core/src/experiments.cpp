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

#include "nfwave/experiments.hpp"

#include "nfwave/beam_training.hpp"
#include "nfwave/posp.hpp"
#include "nfwave/rng.hpp"
#include "nfwave/spectral.hpp"
#include "nfwave/support.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <mutex>
#include <optional>
#include <thread>

namespace nfwave
{
    void parallel_for(std::size_t count, unsigned threads, const std::function<void(std::size_t)> &fn)
    {
        const unsigned workers = std::max(1u, std::min<unsigned>(threads, unsigned(std::max<std::size_t>(count, 1))));
        if (workers == 1)
        {
            for (std::size_t i = 0; i < count; ++i)
                fn(i);
            return;
        }
        std::exception_ptr failure;
        std::mutex m;
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < workers; ++w)
            pool.emplace_back([&, w] {
                try
                {
                    for (std::size_t i = w; i < count; i += workers)
                        fn(i);
                }
                catch (...)
                {
                    std::lock_guard lock(m);
                    if (!failure)
                        failure = std::current_exception();
                }
            });
        for (auto &t : pool)
            t.join();
        if (failure)
            std::rethrow_exception(failure);
    }

    namespace
    {
        std::vector<std::string> provenance_comments(const ExperimentConfig &cfg, const std::string &command)
        {
            std::vector<std::string> c;
            c.push_back("nfwave " + command);
            for (auto &line : cfg.echo())
                c.push_back(line);
            return c;
        }
    } // namespace

    CsvTable run_spectrum(const ExperimentConfig &cfg)
    {
        cfg.validate();
        const ArrayConfig array = cfg.array_config();
        const UserState user = cfg.user_state();
        const WaveGrid base = WaveGrid::oversampled(array, cfg.support.oversample, cfg.support.band_fraction);
        const WaveGrid samples = WaveGrid::dft_samples(array);

        // merge DFT sample positions into the oversampled grid
        struct Row
        {
            double k;
            std::optional<std::size_t> bin;
        };
        std::vector<Row> rows;
        rows.reserve(base.size() + samples.size());
        for (double k : base.points)
            rows.push_back({k, std::nullopt});
        const double tol = 1e-9 * base.sample_step;
        const double edge = base.points.empty() ? 0.0 : base.points.back();
        for (std::size_t b = 0; b < samples.size(); ++b)
        {
            const double k = samples.points[b];
            if (std::abs(k) > edge + tol)
                continue;
            auto it = std::lower_bound(rows.begin(), rows.end(), k - tol, [](const Row &r, double v) { return r.k < v; });
            if (it != rows.end() && std::abs(it->k - k) <= tol)
                it->bin = b;
            else
                rows.insert(it, Row{k, b});
        }

        std::vector<double> points;
        points.reserve(rows.size());
        for (const auto &r : rows)
            points.push_back(r.k);
        const WaveGrid grid = WaveGrid::from_points(array, points);

        QuadratureOptions q = cfg.quadrature_options();
        q.threads = cfg.threads;
        const auto quad = wavenumber_quadrature(array, user, grid, q).magnitudes();
        const auto posp = approx_spectrum(array, user, grid).magnitudes();
        const auto angular = angular_transform(spatial_channel(array, user));

        const double peak = *std::max_element(quad.begin(), quad.end());
        const double to_wavenumber = array.spacing() * std::sqrt(double(array.n_antennas()));

        CsvTable t;
        t.comments = provenance_comments(cfg, "spectrum");
        t.comments.push_back("magnitudes normalized by max |H_quadrature| = " + format_number(peak));
        t.header = {"k_x", "abs_H_quadrature", "abs_H_posp", "abs_H_angular"};
        for (std::size_t i = 0; i < rows.size(); ++i)
        {
            std::string ang;
            if (rows[i].bin)
                ang = format_number(to_wavenumber * std::abs(angular.values[*rows[i].bin]) / peak);
            t.rows.push_back({format_number(rows[i].k), format_number(quad[i] / peak), format_number(posp[i] / peak), ang});
        }
        return t;
    }

    JaccardPoint jaccard_point(const ArrayConfig &array, const SupportConfig &scfg, const QuadratureOptions &qopts,
                               double distance, double omega)
    {
        const UserState user{distance, omega, 1.0};
        const WaveGrid grid = WaveGrid::oversampled(array, scfg.oversample, scfg.band_fraction);
        const SupportEstimate measured = extract_support(wavenumber_quadrature(array, user, grid, qopts), scfg);

        JaccardPoint p;
        p.distance = distance;
        p.omega = omega;
        p.measured = measured.interval;
        p.j_full = jaccard(diffusion_interval(array, user), measured.interval);
        p.j_simplified = jaccard(simplified_interval(array, user), measured.interval);
        p.inside = distance <= effective_rayleigh_distance(array, omega);
        return p;
    }

    std::vector<double> map_distances(const ExperimentConfig &cfg)
    {
        const auto &m = cfg.map;
        std::vector<double> r(std::size_t(m.r_points));
        for (int i = 0; i < m.r_points; ++i)
        {
            const double t = m.r_points == 1 ? 0.0 : double(i) / double(m.r_points - 1);
            r[std::size_t(i)] = m.r_min * std::pow(m.r_max / m.r_min, t);
        }
        if (m.r_points > 1)
            r.back() = m.r_max;
        return r;
    }

    std::vector<double> map_directions(const ExperimentConfig &cfg)
    {
        const auto &m = cfg.map;
        std::vector<double> o(std::size_t(m.omega_points));
        for (int i = 0; i < m.omega_points; ++i)
        {
            const double t = m.omega_points == 1 ? 0.0 : double(i) / double(m.omega_points - 1);
            // symmetric construction keeps mirrored grids exactly mirrored
            o[std::size_t(i)] = 0.5 * (m.omega_min + m.omega_max) + (t - 0.5) * (m.omega_max - m.omega_min);
        }
        return o;
    }

    CsvTable run_jaccard_map(const ExperimentConfig &cfg)
    {
        cfg.validate();
        const ArrayConfig array = cfg.array_config();
        const QuadratureOptions q = cfg.quadrature_options();
        const auto distances = map_distances(cfg);
        const auto directions = map_directions(cfg);

        std::vector<JaccardPoint> points(distances.size() * directions.size());
        parallel_for(points.size(), cfg.threads, [&](std::size_t i) {
            points[i] = jaccard_point(array, cfg.support, q, distances[i / directions.size()],
                                      directions[i % directions.size()]);
        });

        CsvTable t;
        t.comments = provenance_comments(cfg, "jaccard-map");
        t.header = {"r0", "omega", "jaccard_full", "jaccard_simplified", "inside_effective_rayleigh"};
        for (const auto &p : points)
            t.rows.push_back({format_number(p.distance), format_number(p.omega), format_number(p.j_full),
                              format_number(p.j_simplified), p.inside ? "1" : "0"});
        return t;
    }

    std::vector<TrialRecord> simulate_trials(const ExperimentConfig &cfg, std::size_t snr_index)
    {
        cfg.validate();
        if (snr_index >= cfg.training.snr_db.size())
            throw std::out_of_range("simulate_trials: snr_index out of range");
        const ArrayConfig array = cfg.array_config();
        const TrainingConfig tcfg = cfg.training_config();
        const double snr = cfg.training.snr_db[snr_index];
        const auto &schemes = cfg.training.schemes;
        const bool need_codebook = std::find(schemes.begin(), schemes.end(), Scheme::exhaustive) != schemes.end();
        const Codebook codebook = need_codebook ? polar_codebook(array, tcfg.distance_rings) : Codebook{};
        const std::uint64_t master = cfg.training.master_seed;
        const std::uint64_t base = 1 + 8 * std::uint64_t(snr_index);

        const std::size_t trials = std::size_t(cfg.training.trials);
        std::vector<TrialRecord> records(trials * schemes.size());
        parallel_for(trials, cfg.threads, [&](std::size_t trial) {
            NoiseStream draw(derive_seed(master, trial, 0));
            UserState user{cfg.training.distance, draw.uniform(cfg.training.omega_min, cfg.training.omega_max),
                           std::polar(cfg.user.path_gain, cfg.user.path_gain_phase)};
            const ComplexVector h = spatial_channel(array, user);
            const double noise_var = reference_noise_var(array, user.path_gain, snr);

            for (std::size_t s = 0; s < schemes.size(); ++s)
            {
                TrainingResult r;
                switch (schemes[s])
                {
                case Scheme::wdsw_je:
                    r = wdsw_je(simulate_sweep(array, user, snr, derive_seed(master, trial, base + 0)), array, tcfg);
                    break;
                case Scheme::asw_je:
                    r = asw_je(simulate_sweep(array, user, snr, derive_seed(master, trial, base + 1)), array, h, tcfg,
                               derive_seed(master, trial, base + 2));
                    break;
                case Scheme::exhaustive:
                    r = exhaustive_search(array, user, codebook, snr, derive_seed(master, trial, base + 3));
                    break;
                case Scheme::perfect_csi:
                    r = perfect_csi(array, user);
                    break;
                }
                score(r, h, noise_var, tcfg);

                TrialRecord &rec = records[trial * schemes.size() + s];
                rec.scheme = to_string(schemes[s]);
                rec.snr_db = snr;
                rec.true_omega = user.direction_cosine;
                rec.est_omega = r.omega_hat;
                rec.true_r = user.distance;
                rec.est_r = r.r_hat;
                rec.rate = r.rate;
                rec.eff_rate = r.eff_rate;
            }
        });
        return records;
    }

    CsvTable run_beamtrain(const ExperimentConfig &cfg)
    {
        cfg.validate();
        const ArrayConfig array = cfg.array_config();
        const TrainingConfig tcfg = cfg.training_config();

        std::vector<std::size_t> snr_order(cfg.training.snr_db.size());
        for (std::size_t i = 0; i < snr_order.size(); ++i)
            snr_order[i] = i;
        std::stable_sort(snr_order.begin(), snr_order.end(),
                         [&](std::size_t a, std::size_t b) { return cfg.training.snr_db[a] < cfg.training.snr_db[b]; });
        std::vector<Scheme> schemes = cfg.training.schemes;
        std::sort(schemes.begin(), schemes.end());
        schemes.erase(std::unique(schemes.begin(), schemes.end()), schemes.end());

        const auto overhead = [&](Scheme s) -> std::size_t {
            switch (s)
            {
            case Scheme::exhaustive:
                return array.n_antennas() * std::size_t(tcfg.distance_rings + 1);
            case Scheme::asw_je:
                return array.n_antennas() + std::size_t(tcfg.asw_candidates);
            case Scheme::wdsw_je:
                return array.n_antennas();
            case Scheme::perfect_csi:
                return 0;
            }
            return 0;
        };

        CsvTable t;
        t.comments = provenance_comments(cfg, "beamtrain");
        t.header = {"scheme",        "snr_db",         "trials",        "nmse_angle",
                    "nmse_distance", "far_field_count", "mean_rate",     "rate_std_error",
                    "mean_eff_rate", "eff_rate_std_error", "t_tra"};
        for (std::size_t si : snr_order)
        {
            const auto records = simulate_trials(cfg, si);
            for (Scheme s : schemes)
            {
                const std::string name = to_string(s);
                std::vector<TrialRecord> mine;
                std::vector<double> rate, eff;
                for (const auto &r : records)
                    if (r.scheme == name)
                    {
                        mine.push_back(r);
                        rate.push_back(r.rate);
                        eff.push_back(r.eff_rate);
                    }
                const double na = nmse_angle(mine);
                const DistanceNmse nd = nmse_distance(mine);
                const SampleSummary rs = summarize(rate);
                const SampleSummary es = summarize(eff);
                t.rows.push_back({name, format_number(cfg.training.snr_db[si]), std::to_string(mine.size()),
                                  format_number(na), format_number(nd.nmse), std::to_string(nd.far_field),
                                  format_number(rs.mean), format_number(rs.std_error), format_number(es.mean),
                                  format_number(es.std_error), std::to_string(overhead(s))});
            }
        }
        return t;
    }

} // namespace nfwave
