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

// nfwave command-line driver: spectrum, jaccard-map and beamtrain, each writing one CSV.

#include "nfwave/config.hpp"
#include "nfwave/csv.hpp"
#include "nfwave/experiments.hpp"

#include <CLI11.hpp>

#include <cstdint>
#include <exception>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>

namespace
{
    struct Options
    {
        std::string config;
        std::string out;
        std::optional<std::uint64_t> seed;
        unsigned threads = 1;
    };

    void add_common(CLI::App *cmd, Options &o)
    {
        cmd->add_option("--config", o.config, "INI configuration file (defaults apply when omitted)");
        cmd->add_option("--out", o.out, "Output CSV path (overrides output.path)");
        cmd->add_option("--seed", o.seed, "Master seed (overrides training.master_seed)");
        cmd->add_option("--threads", o.threads, "Worker threads")->check(CLI::PositiveNumber);
    }

    int run(const Options &o, nfwave::CsvTable (*fn)(const nfwave::ExperimentConfig &))
    {
        nfwave::ExperimentConfig cfg = o.config.empty() ? nfwave::ExperimentConfig{} : nfwave::load_config(o.config);
        if (o.seed)
            cfg.training.master_seed = *o.seed;
        if (!o.out.empty())
            cfg.output.path = o.out;
        cfg.threads = o.threads;
        if (cfg.output.path.empty())
            throw nfwave::ConfigError("no output path: pass --out or set output.path");
        cfg.validate();
        const auto parent = std::filesystem::absolute(cfg.output.path).parent_path();
        if (!std::filesystem::is_directory(parent))
            throw nfwave::ConfigError("output directory does not exist: " + parent.string());

        nfwave::write_atomic(cfg.output.path, fn(cfg).render());
        std::cerr << "wrote " << cfg.output.path << "\n";
        return 0;
    }
} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"nfwave: near-field XL-array wave-number domain experiments"};
    app.require_subcommand(1);

    Options spectrum, map, train;
    auto *s = app.add_subcommand("spectrum", "Wave-number spectrum: quadrature, POSP and DFT samples");
    add_common(s, spectrum);
    auto *m = app.add_subcommand("jaccard-map", "Jaccard index of predicted vs measured support over (r0, Omega)");
    add_common(m, map);
    auto *b = app.add_subcommand("beamtrain", "Monte-Carlo beam training: NMSE and achievable rates");
    add_common(b, train);

    CLI11_PARSE(app, argc, argv);

    try
    {
        if (s->parsed())
            return run(spectrum, nfwave::run_spectrum);
        if (m->parsed())
            return run(map, nfwave::run_jaccard_map);
        return run(train, nfwave::run_beamtrain);
    }
    catch (const nfwave::ConfigError &e)
    {
        std::cerr << "nfwave: " << e.what() << "\n";
        return 2;
    }
    catch (const std::exception &e)
    {
        std::cerr << "nfwave: " << e.what() << "\n";
        return 1;
    }
}
