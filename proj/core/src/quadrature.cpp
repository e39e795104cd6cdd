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

#include "nfwave/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <mutex>
#include <sstream>
#include <thread>

namespace nfwave
{
    QuadratureError::QuadratureError(double k_x, double achieved_error)
        : std::runtime_error([&] {
              std::ostringstream os;
              os << "wavenumber_quadrature: no convergence at k_x = " << k_x
                 << " rad/m, achieved relative change " << achieved_error;
              return os.str();
          }()),
          k_x_(k_x), achieved_(achieved_error)
    {
    }

    namespace
    {
        // Channel samples on the nested Romberg grids. Level 0 holds the n0 + 1 base nodes,
        // level l >= 1 holds the n0 * 2^(l-1) midpoints added by the l-th halving.
        class ApertureSamples
        {
        public:
            ApertureSamples(const ArrayConfig &cfg, const UserState &user, std::size_t base_intervals, int levels)
                : cfg_(cfg), user_(user), lower_(-0.5 * cfg.aperture()), length_(cfg.aperture()),
                  n0_(base_intervals)
            {
                levels_.resize(std::size_t(levels) + 1);
                for (int l = 0; l <= levels; ++l)
                    levels_[std::size_t(l)] = compute(l);
            }

            double lower() const { return lower_; }
            double step(int level) const { return length_ / (double(n0_) * std::ldexp(1.0, level)); }
            std::size_t cached_levels() const { return levels_.size(); }

            // first node and node spacing of the points introduced at `level`
            double first_node(int level) const { return level == 0 ? lower_ : lower_ + step(level); }
            double node_spacing(int level) const { return level == 0 ? step(0) : 2.0 * step(level); }

            const std::vector<cd> &level(int l) const { return levels_[std::size_t(l)]; }
            std::vector<cd> compute(int l) const
            {
                const std::size_t count = l == 0 ? n0_ + 1 : n0_ << (l - 1);
                const double x0 = first_node(l);
                const double dx = node_spacing(l);
                std::vector<cd> s(count);
                for (std::size_t i = 0; i < count; ++i)
                    s[i] = continuous_channel(cfg_, user_, x0 + dx * double(i));
                return s;
            }

        private:
            const ArrayConfig &cfg_;
            const UserState &user_;
            double lower_;
            double length_;
            std::size_t n0_;
            std::vector<std::vector<cd>> levels_;
        };

        // sum_i s_i exp(-j k (x0 + i dx)); the phasor recurrence is re-anchored every 256 nodes
        cd modulated_sum(const std::vector<cd> &s, double k, double x0, double dx, bool halve_ends)
        {
            constexpr std::size_t kAnchor = 256;
            const cd rot = std::polar(1.0, -k * dx);
            cd acc(0.0, 0.0);
            cd phasor;
            for (std::size_t i = 0; i < s.size(); ++i)
            {
                if (i % kAnchor == 0)
                    phasor = std::polar(1.0, -k * (x0 + dx * double(i)));
                cd term = s[i] * phasor;
                if (halve_ends && (i == 0 || i + 1 == s.size()))
                    term *= 0.5;
                acc += term;
                phasor *= rot;
            }
            return acc;
        }

        constexpr int kCachedLevels = 4;

        cd romberg(const ApertureSamples &samples, double k, double floor, const QuadratureOptions &opts)
        {
            std::vector<cd> prev, row;
            double change = 0.0;
            cd trapezoid(0.0, 0.0);
            for (int l = 0; l <= opts.max_levels; ++l)
            {
                std::vector<cd> scratch;
                const std::vector<cd> *nodes;
                if (std::size_t(l) < samples.cached_levels())
                    nodes = &samples.level(l);
                else
                {
                    scratch = samples.compute(l);
                    nodes = &scratch;
                }
                const cd sum = modulated_sum(*nodes, k, samples.first_node(l), samples.node_spacing(l), l == 0);
                trapezoid = l == 0 ? samples.step(0) * sum : 0.5 * trapezoid + samples.step(l) * sum;

                row.assign(std::size_t(l) + 1, cd(0.0, 0.0));
                row[0] = trapezoid;
                double factor = 1.0;
                for (int m = 1; m <= l; ++m)
                {
                    factor *= 4.0;
                    row[std::size_t(m)] = row[std::size_t(m - 1)] +
                                          (row[std::size_t(m - 1)] - prev[std::size_t(m - 1)]) / (factor - 1.0);
                }
                if (l > 0)
                {
                    const cd best = row[std::size_t(l)];
                    change = std::abs(best - prev[std::size_t(l - 1)]) / std::max(std::abs(best), floor);
                    if (l >= opts.min_levels && change <= opts.rel_tol)
                        return best;
                }
                prev.swap(row);
            }
            throw QuadratureError(k, change);
        }
    } // namespace

    ComplexSpectrum wavenumber_quadrature(const ArrayConfig &cfg, const UserState &user, const WaveGrid &grid,
                                          const QuadratureOptions &opts)
    {
        user.validate();
        if (!(opts.rel_tol > 0.0) || !(opts.phase_step > 0.0) || opts.min_levels < 1 ||
            opts.max_levels < opts.min_levels)
            throw std::invalid_argument("wavenumber_quadrature: invalid options");

        double k_max = 0.0;
        for (double k : grid.points)
            k_max = std::max(k_max, std::abs(k));
        // |d/dx phase| <= |k_x| + 2 pi / lambda over the aperture
        const double rate = k_max + cfg.wavenumber();
        const auto base = std::max<std::size_t>(
            2, std::size_t(std::ceil(cfg.aperture() * rate / opts.phase_step)));
        const ApertureSamples samples(cfg, user, base, std::min(kCachedLevels, opts.max_levels));

        double l1 = 0.0;
        for (const auto &s : samples.level(0))
            l1 += std::abs(s);
        const double floor = 1e-4 * l1 * samples.step(0);

        ComplexSpectrum out;
        out.grid = grid;
        out.provenance = Provenance::quadrature;
        out.values.assign(grid.size(), cd(0.0, 0.0));

        const unsigned threads = std::max(1u, std::min<unsigned>(opts.threads, unsigned(grid.size())));
        if (threads == 1)
        {
            for (std::size_t i = 0; i < grid.size(); ++i)
                out.values[i] = romberg(samples, grid.points[i], floor, opts);
            return out;
        }

        std::exception_ptr failure;
        std::mutex failure_mutex;
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < threads; ++t)
        {
            pool.emplace_back([&, t] {
                try
                {
                    for (std::size_t i = t; i < grid.size(); i += threads)
                        out.values[i] = romberg(samples, grid.points[i], floor, opts);
                }
                catch (...)
                {
                    std::lock_guard lock(failure_mutex);
                    if (!failure)
                        failure = std::current_exception();
                }
            });
        }
        for (auto &th : pool)
            th.join();
        if (failure)
            std::rethrow_exception(failure);
        return out;
    }

} // namespace nfwave
