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

#ifndef NFWAVE_EXPERIMENTS_HPP
#define NFWAVE_EXPERIMENTS_HPP

#include "nfwave/config.hpp"
#include "nfwave/csv.hpp"
#include "nfwave/metrics.hpp"

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

namespace nfwave
{
    // Calls fn(i) for every i in [0, count). Worker w handles i = w, w + threads, ...; the first
    // exception thrown by any worker is rethrown after all workers finish.
    void parallel_for(std::size_t count, unsigned threads, const std::function<void(std::size_t)> &fn);

    // Columns: k_x, abs_H_quadrature, abs_H_posp, abs_H_angular. Rows cover the oversampled grid plus
    // the N DFT sample positions; abs_H_angular is filled only on sample rows.
    CsvTable run_spectrum(const ExperimentConfig &cfg);

    struct JaccardPoint
    {
        double distance = 0.0;
        double omega = 0.0;
        double j_full = 0.0;       // J(diffusion_interval, measured)
        double j_simplified = 0.0; // J(simplified_interval, measured)
        bool inside = false;       // distance <= effective Rayleigh distance
        WaveInterval measured;     // beta-support of the quadrature spectrum
    };

    JaccardPoint jaccard_point(const ArrayConfig &array, const SupportConfig &scfg, const QuadratureOptions &qopts,
                               double distance, double omega);

    std::vector<double> map_distances(const ExperimentConfig &cfg);  // log-spaced, inclusive
    std::vector<double> map_directions(const ExperimentConfig &cfg); // uniform, inclusive

    // Columns: r0, omega, jaccard_full, jaccard_simplified, inside_effective_rayleigh.
    // Sorted by r0, then omega.
    CsvTable run_jaccard_map(const ExperimentConfig &cfg);

    // One record per (trial, scheme) at training.snr_db[snr_index], ordered by trial then scheme
    // as listed in the config. Per-trial streams: derive_seed(master, trial, 0) draws Omega (shared
    // by every SNR); measurement noise uses streams 1 + 8 * snr_index + {0: WDSW-JE sweep,
    // 1: ASW-JE sweep, 2: ASW-JE candidates, 3: exhaustive}.
    std::vector<TrialRecord> simulate_trials(const ExperimentConfig &cfg, std::size_t snr_index);

    // Columns: scheme, snr_db, trials, nmse_angle, nmse_distance, far_field_count, mean_rate,
    // rate_std_error, mean_eff_rate, eff_rate_std_error, t_tra. Sorted by snr_db, then scheme.
    CsvTable run_beamtrain(const ExperimentConfig &cfg);

} // namespace nfwave

#endif
