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
#include "nfwave/spectral.hpp"

#include <benchmark/benchmark.h>

#include <limits>

using namespace nfwave;

namespace
{
    const ArrayConfig cfg = ArrayConfig::half_wavelength(256, 30e9);

    void BM_Quadrature(benchmark::State &state)
    {
        const auto grid = WaveGrid::oversampled(cfg, int(state.range(0)));
        const UserState u{10.0, 0.05, 1.0};
        for (auto _ : state)
            benchmark::DoNotOptimize(wavenumber_quadrature(cfg, u, grid));
        state.SetItemsProcessed(state.iterations() * std::int64_t(grid.size()));
    }
    BENCHMARK(BM_Quadrature)->Arg(1)->Arg(4)->Arg(16)->Unit(benchmark::kMillisecond);

    void BM_SincInterpolate(benchmark::State &state)
    {
        const auto grid = WaveGrid::oversampled(cfg, int(state.range(0)));
        const auto angular = angular_transform(spatial_channel(cfg, {10.0, 0.05, 1.0}));
        for (auto _ : state)
            benchmark::DoNotOptimize(sinc_interpolate(angular, cfg, grid));
        state.SetItemsProcessed(state.iterations() * std::int64_t(grid.size()));
    }
    BENCHMARK(BM_SincInterpolate)->Arg(4)->Arg(16)->Unit(benchmark::kMicrosecond);

    void BM_AngularTransform(benchmark::State &state)
    {
        const auto h = spatial_channel(cfg, {10.0, 0.05, 1.0});
        for (auto _ : state)
            benchmark::DoNotOptimize(angular_transform(h));
    }
    BENCHMARK(BM_AngularTransform)->Unit(benchmark::kMicrosecond);

    void BM_WdswJe(benchmark::State &state)
    {
        const TrainingConfig t;
        const auto sweep = simulate_sweep(cfg, {20.0, 0.3, 1.0}, 20.0, 1);
        for (auto _ : state)
            benchmark::DoNotOptimize(wdsw_je(sweep, cfg, t));
    }
    BENCHMARK(BM_WdswJe)->Unit(benchmark::kMicrosecond);

    void BM_ExhaustiveSearch(benchmark::State &state)
    {
        const auto cb = polar_codebook(cfg, 8);
        const UserState u{20.0, 0.3, 1.0};
        for (auto _ : state)
            benchmark::DoNotOptimize(exhaustive_search(cfg, u, cb, 20.0, 1));
    }
    BENCHMARK(BM_ExhaustiveSearch)->Unit(benchmark::kMillisecond);
} // namespace

BENCHMARK_MAIN();
