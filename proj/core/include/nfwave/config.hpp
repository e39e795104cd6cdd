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

#ifndef NFWAVE_CONFIG_HPP
#define NFWAVE_CONFIG_HPP

#include "nfwave/beam_training.hpp"
#include "nfwave/geometry.hpp"
#include "nfwave/spectral.hpp"
#include "nfwave/support.hpp"

#include <cstdint>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <vector>

namespace nfwave
{
    class ConfigError : public std::runtime_error
    {
    public:
        using std::runtime_error::runtime_error;
    };

    enum class Scheme
    {
        exhaustive,
        asw_je,
        wdsw_je,
        perfect_csi
    };

    std::string to_string(Scheme s);
    Scheme scheme_from_string(const std::string &name); // throws ConfigError

    // Experiment constants. Defaults reproduce the reference setup: N = 256, f_c = 30 GHz,
    // d = lambda / 2, r0 = 20 m for training, 1000 trials, beta = 0.42.
    struct ExperimentConfig
    {
        struct Array
        {
            std::size_t n_antennas = 256;
            double carrier_freq = 30e9;
            double spacing = 0.0; // 0 selects lambda / 2
            ApertureConvention aperture_convention = ApertureConvention::n_minus_1;
            double wave_speed = kSpeedOfLight;
        } array;

        struct User
        {
            double distance = 10.0;
            double direction_cosine = 0.05;
            double path_gain = 1.0;
            double path_gain_phase = 0.0; // rad
        } user;

        SupportConfig support;

        struct Map
        {
            double r_min = 2.0;
            double r_max = 400.0;
            int r_points = 24; // log-spaced
            double omega_min = -0.95;
            double omega_max = 0.95;
            int omega_points = 19; // uniform
        } map;

        struct Training
        {
            std::vector<double> snr_db{0.0, 5.0, 10.0, 15.0, 20.0};
            int trials = 1000;
            double distance = 20.0;
            double omega_min = -1.0;
            double omega_max = 1.0;
            std::vector<Scheme> schemes{Scheme::exhaustive, Scheme::asw_je, Scheme::wdsw_je, Scheme::perfect_csi};
            int asw_candidates = 3;
            int distance_rings = 8;
            double t_tot = 2000.0;
            double far_field_margin = 0.1;
            RateConvention rate_convention = RateConvention::squared;
            std::uint64_t master_seed = 1;
        } training;

        struct Quadrature
        {
            double rel_tol = 1e-6;
        } quadrature;

        struct Output
        {
            std::string path; // empty: must come from --out
        } output;

        unsigned threads = 1; // runtime only, never echoed

        ArrayConfig array_config() const;
        UserState user_state() const;
        TrainingConfig training_config() const;
        QuadratureOptions quadrature_options() const;

        void validate() const; // throws ConfigError

        // Every setting except output.path as "section.key = value" lines, in a fixed order
        std::vector<std::string> echo() const;
    };

    // INI-style text: [section] headers, key = value lines, ';' or '#' comments. Keys that are not
    // recognized are errors. Missing keys keep their defaults.
    ExperimentConfig parse_config(const std::string &text);
    ExperimentConfig load_config(const std::filesystem::path &path);

} // namespace nfwave

#endif
