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

// Acceptance checks. Prints one PASS/FAIL line per criterion; exit status is the number of failures.
//
//   nfwave_acceptance [--only <name>] [--cli <path to nfwave>] [--workdir <dir>]

#include "nfwave/beam_training.hpp"
#include "nfwave/config.hpp"
#include "nfwave/csv.hpp"
#include "nfwave/experiments.hpp"
#include "nfwave/posp.hpp"
#include "nfwave/rng.hpp"
#include "nfwave/spectral.hpp"
#include "nfwave/support.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

using namespace nfwave;
namespace fs = std::filesystem;

namespace
{
    struct Outcome
    {
        bool pass = false;
        std::string detail;
    };

    struct Criterion
    {
        std::string name;
        double budget_s; // runtime limit
        std::function<Outcome()> run;
    };

    std::string fmt(double v, int prec = 4)
    {
        char buf[64];
        std::snprintf(buf, sizeof buf, "%.*g", prec, v);
        return buf;
    }

    const ArrayConfig &reference_array()
    {
        static const ArrayConfig cfg = ArrayConfig::half_wavelength(256, 30e9);
        return cfg;
    }

    double median(std::vector<double> v)
    {
        std::sort(v.begin(), v.end());
        const std::size_t n = v.size();
        return n % 2 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
    }

    std::string read_file(const fs::path &p)
    {
        std::ifstream in(p, std::ios::binary);
        std::stringstream ss;
        ss << in.rdbuf();
        return ss.str();
    }

    std::string cli_path;
    fs::path workdir = fs::temp_directory_path() / "nfwave_acceptance";

    // --- criteria ---------------------------------------------------------------------------

    Outcome rayleigh()
    {
        // lambda = 1 cm exactly at 30 GHz needs c = 3e8
        const double r_n = rayleigh_distance(ArrayConfig::half_wavelength(256, 30e9, ApertureConvention::n, 3e8));
        const double r_n1 =
            rayleigh_distance(ArrayConfig::half_wavelength(256, 30e9, ApertureConvention::n_minus_1, 3e8));
        const bool ok = std::abs(r_n - 327.68) <= 1e-12 * 327.68 && std::abs(r_n1 - 325.125) <= 1e-12 * 325.125;
        return {ok, "D=N*d: " + fmt(r_n, 12) + " m, D=(N-1)*d: " + fmt(r_n1, 12) + " m"};
    }

    Outcome stationary_phase()
    {
        const auto &cfg = reference_array();
        const double k0 = cfg.wavenumber(), D = cfg.aperture();
        NoiseStream rng(derive_seed(2024, 0, 1));
        double worst = 0.0, worst_analytic = 0.0;
        for (int i = 0; i < 200; ++i)
        {
            const UserState u{rng.uniform(2.0 * D, rayleigh_distance(cfg)), rng.uniform(-0.95, 0.95), 1.0};
            const auto iv = diffusion_interval(cfg, u);
            const double k = iv.lower + rng.uniform(0.01, 0.99) * iv.width();
            const double xs = stationary_point(cfg, u, k);
            const auto pair = channel_phase_pair(cfg, u, k);
            const double h = 1e-6;
            const double fd = (pair.phase_at(xs + h) - pair.phase_at(xs - h)) / (2.0 * h);
            worst = std::max(worst, std::abs(fd));
            worst_analytic = std::max(worst_analytic, std::abs(pair.phase_d1_at(xs)));
        }
        const double limit = 1e-6 * k0;
        return {worst < limit && worst_analytic < limit,
                "max |psi'(x_s)| = " + fmt(worst) + " (finite difference), " + fmt(worst_analytic) +
                    " (analytic); limit " + fmt(limit)};
    }

    Outcome inversion()
    {
        const auto &cfg = reference_array();
        const double D = cfg.aperture();
        NoiseStream rng(derive_seed(2024, 0, 2));
        double worst_omega = 0.0, worst_r = 0.0;
        int far = 0;
        for (int i = 0; i < 1000; ++i)
        {
            const double omega = rng.uniform(-0.95, 0.95);
            // stay inside the near-field regime where a finite distance is returned
            const double r = 2.0 * D + rng.uniform(0.0, 0.999) * (effective_rayleigh_distance(cfg, omega) - 2.0 * D);
            const auto est = estimate_user(simplified_interval(cfg, {r, omega, 1.0}), cfg);
            if (est.far_field())
            {
                ++far;
                continue;
            }
            worst_omega = std::max(worst_omega, std::abs(est.omega - omega) / std::abs(omega));
            worst_r = std::max(worst_r, std::abs(est.distance - r) / r);
        }
        return {far == 0 && worst_omega < 1e-10 && worst_r < 1e-10,
                "max rel err Omega " + fmt(worst_omega) + ", r0 " + fmt(worst_r) + ", far-field verdicts " +
                    std::to_string(far) + "; limit 1e-10"};
    }

    Outcome reconstruction()
    {
        const auto &cfg = reference_array();
        const auto grid = WaveGrid::oversampled(cfg, 16, 0.9);
        std::string detail = "max |sinc - quad| / max|quad|:";
        bool ok = true;
        for (double omega : {0.0, 0.05, 0.5})
        {
            const UserState u{10.0, omega, 1.0};
            const auto q = wavenumber_quadrature(cfg, u, grid).magnitudes();
            const auto s = sinc_interpolate(angular_transform(spatial_channel(cfg, u)), cfg, grid).magnitudes();
            const double peak = *std::max_element(q.begin(), q.end());
            double worst = 0.0;
            for (std::size_t i = 0; i < q.size(); ++i)
                worst = std::max(worst, std::abs(s[i] - q[i]) / peak);
            ok = ok && worst <= 0.02;
            detail += " Omega=" + fmt(omega) + ": " + fmt(worst);
        }
        return {ok, detail + "; limit 0.02 over |k_x| <= 0.9 k0"};
    }

    Outcome farfield_convergence()
    {
        const auto &cfg = reference_array();
        const auto grid = WaveGrid::oversampled(cfg, 16);
        const double r0 = 10.0 * rayleigh_distance(cfg);
        std::string detail = "relative L2:";
        bool ok = true;
        for (double omega : {0.0, 0.05, 0.5})
        {
            const auto q = wavenumber_quadrature(cfg, {r0, omega, 1.0}, grid);
            const auto f = farfield_spectrum(cfg, omega, grid);
            double num = 0.0, den = 0.0;
            for (std::size_t i = 0; i < grid.size(); ++i)
            {
                num += std::norm(q.values[i] - f.values[i]);
                den += std::norm(f.values[i]);
            }
            const double rel = std::sqrt(num / den);
            ok = ok && rel <= 0.02;
            detail += " Omega=" + fmt(omega) + ": " + fmt(rel);
        }
        return {ok, detail + " at r0 = 10 r_ray; limit 0.02"};
    }

    Outcome jaccard_accuracy()
    {
        const auto &cfg = reference_array();
        const ExperimentConfig defaults;
        const double D = cfg.aperture();
        std::vector<double> js;
        double worst_r = 0.0, worst_omega = 0.0, worst = 2.0;
        for (int io = 0; io < 13; ++io)
        {
            const double omega = -0.9 + 0.15 * io;
            const double r_hi = effective_rayleigh_distance(cfg, omega);
            for (int ir = 0; ir < 8; ++ir)
            {
                const double r = 5.0 * D * std::pow(r_hi / (5.0 * D), ir / 7.0);
                const auto p = jaccard_point(cfg, defaults.support, defaults.quadrature_options(), r, omega);
                js.push_back(p.j_full);
                if (p.j_full < worst)
                    worst = p.j_full, worst_r = r / r_hi, worst_omega = omega;
            }
        }
        const double med = median(js);
        const auto below = std::count_if(js.begin(), js.end(), [](double j) { return j < 0.70; });
        return {worst >= 0.70 && med >= 0.80,
                "min J = " + fmt(worst) + " (at r0 = " + fmt(worst_r, 3) + " r_eff, Omega = " + fmt(worst_omega, 3) +
                    "), median J = " + fmt(med) + ", " + std::to_string(below) + "/" + std::to_string(js.size()) +
                    " points below 0.70; limits min 0.70, median 0.80"};
    }

    Outcome simplified_degradation()
    {
        const auto &cfg = reference_array();
        const ExperimentConfig defaults;
        const double D = cfg.aperture();
        const auto near = jaccard_point(cfg, defaults.support, defaults.quadrature_options(), 1.5 * D, 0.5);
        const auto far = jaccard_point(cfg, defaults.support, defaults.quadrature_options(), 50.0 * D, 0.5);
        const double drop = far.j_simplified - near.j_simplified;
        return {drop >= 0.1, "J_s(1.5D) = " + fmt(near.j_simplified) + ", J_s(50D) = " + fmt(far.j_simplified) +
                                 ", drop " + fmt(drop) + "; required drop >= 0.1 (J_full: " + fmt(near.j_full) +
                                 ", " + fmt(far.j_full) + ")"};
    }

    Outcome noiseless_round_trip()
    {
        const auto &cfg = reference_array();
        const TrainingConfig tcfg;
        double worst_omega = 0.0, worst_r = 0.0;
        int bad = 0;
        for (int i = 0; i < 50; ++i)
        {
            const double omega = -0.6 + 1.2 * i / 49.0;
            const UserState u{20.0, omega, 1.0};
            const auto r = wdsw_je(simulate_sweep(cfg, u, std::numeric_limits<double>::infinity(), 0), cfg, tcfg);
            const double eo = std::abs(r.omega_hat - omega), er = std::abs(r.r_hat - 20.0) / 20.0;
            worst_omega = std::max(worst_omega, eo);
            worst_r = std::max(worst_r, er);
            bad += (eo > 0.01 || !(er <= 0.1));
        }
        return {bad == 0, "max |dOmega| = " + fmt(worst_omega) + ", max |dr|/r = " + fmt(worst_r) + ", " +
                              std::to_string(bad) + "/50 outside; limits 0.01, 0.1"};
    }

    Outcome monte_carlo_ordering()
    {
        ExperimentConfig c;
        c.training.snr_db = {20.0};
        c.training.trials = 500;
        c.training.distance = 20.0;
        c.training.omega_min = -1.0;
        c.training.omega_max = 1.0;
        c.training.schemes = {Scheme::exhaustive, Scheme::asw_je, Scheme::wdsw_je, Scheme::perfect_csi};
        const auto records = simulate_trials(c, 0);

        auto pick = [&](const std::string &s) {
            std::vector<TrialRecord> out;
            for (const auto &r : records)
                if (r.scheme == s)
                    out.push_back(r);
            return out;
        };
        const auto ex = pick("exhaustive"), asw = pick("asw_je"), wd = pick("wdsw_je"), pc = pick("perfect_csi");

        // paired differences: every scheme sees the same users
        auto paired = [](const std::vector<TrialRecord> &a, const std::vector<TrialRecord> &b, bool eff) {
            std::vector<double> d(a.size());
            for (std::size_t i = 0; i < a.size(); ++i)
                d[i] = eff ? a[i].eff_rate - b[i].eff_rate : a[i].rate - b[i].rate;
            return summarize(d);
        };
        const double na_wd = nmse_angle(wd), na_asw = nmse_angle(asw);
        const auto pc_wd = paired(pc, wd, false), wd_asw = paired(wd, asw, false), eff = paired(wd, ex, true);

        const bool c1 = na_wd < na_asw;
        const bool c2 = pc_wd.mean >= -pc_wd.std_error;
        const bool c3 = wd_asw.mean >= -wd_asw.std_error;
        const bool c4 = eff.mean > 0.0;
        auto mark = [](bool b) { return b ? "ok" : "FAIL"; };
        auto mean_rate = [](const std::vector<TrialRecord> &v) {
            double s = 0.0;
            for (const auto &r : v)
                s += r.rate;
            return s / double(v.size());
        };
        return {c1 && c2 && c3 && c4,
                std::string("NMSE_angle WDSW ") + fmt(na_wd) + " < ASW " + fmt(na_asw) + " [" + mark(c1) +
                    "]; rate perfect " + fmt(mean_rate(pc)) + " >= WDSW " + fmt(mean_rate(wd)) + " [" + mark(c2) +
                    "] >= ASW " + fmt(mean_rate(asw)) + " (paired diff " + fmt(wd_asw.mean) + " +- " +
                    fmt(wd_asw.std_error) + ") [" + mark(c3) + "]; eff rate WDSW - exhaustive " + fmt(eff.mean) +
                    " [" + mark(c4) + "]"};
    }

    Outcome determinism()
    {
        fs::create_directories(workdir);
        const fs::path a = workdir / "beamtrain_a.csv", b = workdir / "beamtrain_b.csv";
        fs::remove(a);
        fs::remove(b);
        if (!cli_path.empty())
        {
            const std::string base = "\"" + cli_path + "\" beamtrain --seed 7 --out ";
            const int ra = std::system((base + "\"" + a.string() + "\" --threads 1").c_str());
            const int rb = std::system((base + "\"" + b.string() + "\" --threads 2").c_str());
            if (ra != 0 || rb != 0)
                return {false, "CLI exited with status " + std::to_string(ra) + " / " + std::to_string(rb)};
        }
        else
        {
            ExperimentConfig c;
            c.training.master_seed = 7;
            write_atomic(a, run_beamtrain(c).render());
            c.threads = 2;
            write_atomic(b, run_beamtrain(c).render());
        }
        const std::string ca = read_file(a), cb = read_file(b);
        const bool ok = !ca.empty() && ca == cb;
        return {ok, std::string(cli_path.empty() ? "library" : "CLI") + " runs (1 vs 2 threads): " +
                        std::to_string(ca.size()) + " bytes, " + (ok ? "identical" : "different")};
    }

    const std::vector<Criterion> &criteria()
    {
        static const std::vector<Criterion> all{
            {"rayleigh-constant", 1.0, rayleigh},
            {"stationary-phase", 1.0, stationary_phase},
            {"inversion-exactness", 1.0, inversion},
            {"reconstruction", 60.0, reconstruction},
            {"farfield-convergence", 60.0, farfield_convergence},
            {"jaccard-accuracy", 300.0, jaccard_accuracy},
            {"simplified-degradation", 60.0, simplified_degradation},
            {"wdsw-noiseless-round-trip", 60.0, noiseless_round_trip},
            {"monte-carlo-ordering", 300.0, monte_carlo_ordering},
            {"beamtrain-determinism", 300.0, determinism},
        };
        return all;
    }
} // namespace

int main(int argc, char **argv)
{
    std::string only;
    for (int i = 1; i < argc; ++i)
    {
        const std::string arg = argv[i];
        if ((arg == "--only" || arg == "--cli" || arg == "--workdir") && i + 1 < argc)
        {
            const std::string v = argv[++i];
            if (arg == "--only")
                only = v;
            else if (arg == "--cli")
                cli_path = v;
            else
                workdir = v;
        }
        else if (arg == "--list")
        {
            for (const auto &c : criteria())
                std::cout << c.name << "\n";
            return 0;
        }
        else
        {
            std::cerr << "usage: " << argv[0] << " [--list] [--only <name>] [--cli <nfwave>] [--workdir <dir>]\n";
            return 64;
        }
    }

    int failures = 0, ran = 0;
    for (const auto &c : criteria())
    {
        if (!only.empty() && c.name != only)
            continue;
        ++ran;
        const auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try
        {
            o = c.run();
        }
        catch (const std::exception &e)
        {
            o = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        const bool in_time = secs <= c.budget_s;
        const bool pass = o.pass && in_time;
        failures += !pass;
        std::cout << (pass ? "PASS " : "FAIL ") << c.name << ": " << o.detail << " [" << fmt(secs, 3) << " s"
                  << (in_time ? "" : ", over the " + fmt(c.budget_s) + " s budget") << "]" << std::endl;
    }
    if (ran == 0)
    {
        std::cerr << "no criterion named '" << only << "'\n";
        return 64;
    }
    return failures;
}
