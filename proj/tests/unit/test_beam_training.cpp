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

#include <catch_amalgamated.hpp>

#include <cmath>
#include <limits>

using namespace nfwave;
using Catch::Approx;

namespace
{
    const ArrayConfig cfg = ArrayConfig::half_wavelength(256, 30e9);
    constexpr double kNoiseless = std::numeric_limits<double>::infinity();

    double gain(const ComplexVector &h, const ComplexVector &v)
    {
        cd y(0.0);
        for (std::size_t i = 0; i < h.size(); ++i)
            y += std::conj(v.values[i]) * h.values[i];
        return std::norm(y);
    }
} // namespace

TEST_CASE("seed derivation", "[rng]")
{
    CHECK(derive_seed(1, 0, 0) == derive_seed(1, 0, 0));
    CHECK(derive_seed(1, 0, 0) != derive_seed(1, 0, 1));
    CHECK(derive_seed(1, 0, 0) != derive_seed(1, 1, 0));
    CHECK(derive_seed(1, 0, 0) != derive_seed(2, 0, 0));
    NoiseStream a(5), b(5);
    CHECK(a.draw(1.0) == b.draw(1.0));
    CHECK(NoiseStream(9).draw(0.0) == cd(0.0));
}

TEST_CASE("sweep measurement", "[beam_training]")
{
    const UserState u{20.0, 0.3, std::polar(1.0, 0.7)};
    CHECK(reference_noise_var(cfg, u.path_gain, 20.0) == Approx(2.56));
    CHECK(reference_noise_var(cfg, u.path_gain, kNoiseless) == 0.0);

    auto clean = simulate_sweep(cfg, u, kNoiseless, 3);
    auto ref = angular_transform(spatial_channel(cfg, u));
    CHECK(clean.values == ref.values);
    CHECK(clean.angular().domain == Domain::angular);

    auto s1 = simulate_sweep(cfg, u, 10.0, 99);
    auto s2 = simulate_sweep(cfg, u, 10.0, 99);
    CHECK(s1.values == s2.values);
    CHECK(s1.values != simulate_sweep(cfg, u, 10.0, 100).values);

    double power = 0.0;
    std::size_t count = 0;
    for (std::uint64_t t = 0; t < 1000; ++t)
    {
        auto s = simulate_sweep(cfg, u, 20.0, derive_seed(4, t, 1));
        for (std::size_t n = 0; n < s.values.size(); ++n, ++count)
            power += std::norm(s.values[n] - ref.values[n]);
    }
    CHECK(power / double(count) == Approx(2.56).epsilon(0.05));
}

TEST_CASE("polar codebook", "[beam_training]")
{
    auto cb = polar_codebook(cfg, 8);
    CHECK(cb.size() == 256 * 9);
    for (std::size_t e = 0; e < cb.size(); e += 97)
        CHECK(cb.entries[e].beamformer.norm() == Approx(1.0).epsilon(1e-12));
    // first ring at a quarter of the effective Rayleigh distance, last at the full distance
    const double r_eff = effective_rayleigh_distance(cfg, cb.entries[0].omega);
    CHECK(cb.entries[0].distance == Approx(0.25 * r_eff));
    CHECK(cb.entries[7].distance == Approx(r_eff));
    CHECK(is_far_field(cb.entries[8].distance));
    CHECK_THROWS_AS(polar_codebook(cfg, 0), std::invalid_argument);
}

TEST_CASE("far-field width threshold", "[beam_training]")
{
    // 2 u / pi with sin(u)/u = 0.42, u = 2.0794852392
    const double main_lobe = 2.0 * 2.0794852392315397 / kPi * dft_sample_step(cfg);
    CHECK(far_field_width(cfg, 0.42, 0.0) == Approx(main_lobe).epsilon(1e-9));
    CHECK(far_field_width(cfg, 0.42, 0.1) == Approx(1.1 * main_lobe).epsilon(1e-9));
    CHECK_THROWS_AS(far_field_width(cfg, 1.0, 0.1), std::invalid_argument);
}

TEST_CASE("WDSW-JE", "[beam_training]")
{
    TrainingConfig t;
    SECTION("noiseless near-field round trip")
    {
        const UserState u{20.0, 0.3, 1.0};
        auto r = wdsw_je(simulate_sweep(cfg, u, kNoiseless, 1), cfg, t);
        CHECK(std::abs(r.omega_hat - 0.3) <= 0.01);
        CHECK(std::abs(r.r_hat - 20.0) / 20.0 <= 0.1);
        CHECK(r.t_train == 256);
        CHECK(r.beamformer.norm() == Approx(1.0).epsilon(1e-12));
        CHECK_FALSE(r.fallback);
    }
    SECTION("far user gets a far-field verdict")
    {
        const double omega = dft_direction_cosine(256, 150);
        const UserState u{5.0 * rayleigh_distance(cfg), omega, 1.0};
        auto r = wdsw_je(simulate_sweep(cfg, u, kNoiseless, 1), cfg, t);
        REQUIRE(is_far_field(r.r_hat));
        auto a = far_steering_vector(cfg, r.omega_hat);
        CHECK(std::abs(r.omega_hat - omega) < 1e-3);
        CHECK(r.beamformer.values == a.values);
    }
    SECTION("all-zero sweep falls back to the strongest beam")
    {
        SweepMeasurement s;
        s.values.assign(256, cd(0.0));
        auto r = wdsw_je(s, cfg, t);
        CHECK(r.fallback);
        CHECK(r.beamformer.norm() == Approx(1.0));
    }
    SECTION("wrong sweep length is rejected")
    {
        SweepMeasurement s;
        s.values.assign(10, cd(1.0));
        CHECK_THROWS_AS(wdsw_je(s, cfg, t), std::invalid_argument);
    }
}

TEST_CASE("ASW-JE", "[beam_training]")
{
    TrainingConfig t;
    const double omega = dft_direction_cosine(256, 170);
    const UserState u{20.0, omega, 1.0};
    const auto h = spatial_channel(cfg, u);
    auto r = asw_je(simulate_sweep(cfg, u, kNoiseless, 1), cfg, h, t, 2);
    CHECK(std::abs(r.omega_hat - omega) <= 1.0 / 256.0);
    CHECK(r.t_train == 259);
    CHECK(r.beamformer.norm() == Approx(1.0).epsilon(1e-12));

    t.asw_candidates = 4;
    CHECK_THROWS_AS(t.validate(), std::invalid_argument);
}

TEST_CASE("exhaustive search", "[beam_training]")
{
    auto cb = polar_codebook(cfg, 8);
    const auto &target = cb.entries[9 * 100 + 3];
    const UserState u{target.distance, target.omega, 1.0};
    auto r = exhaustive_search(cfg, u, cb, kNoiseless, 1);
    CHECK(r.omega_hat == target.omega);
    CHECK(r.r_hat == target.distance);
    CHECK(r.t_train == cb.size());
    CHECK_THROWS_AS(exhaustive_search(cfg, u, Codebook{}, 10.0, 1), std::invalid_argument);
}

TEST_CASE("perfect CSI is the matched filter", "[beam_training]")
{
    TrainingConfig t;
    const UserState u{20.0, -0.41, std::polar(0.8, 1.0)};
    const auto h = spatial_channel(cfg, u);
    auto p = perfect_csi(cfg, u);
    CHECK(p.t_train == 0);
    CHECK(p.beamformer.norm() == Approx(1.0).epsilon(1e-12));
    CHECK(gain(h, p.beamformer) == Approx(std::pow(h.norm(), 2)).epsilon(1e-12));

    const double var = reference_noise_var(cfg, u.path_gain, 10.0);
    score(p, h, var, t);
    auto w = wdsw_je(simulate_sweep(cfg, u, 10.0, 5), cfg, t);
    score(w, h, var, t);
    CHECK(p.rate >= w.rate);
    CHECK(p.eff_rate == p.rate);
    CHECK(w.eff_rate == Approx((1.0 - 256.0 / 2000.0) * w.rate));

    auto far = perfect_csi(cfg, {1e9, 0.2, 1.0});
    // same direction up to a global phase
    CHECK(gain(far.beamformer, far_steering_vector(cfg, 0.2)) == Approx(1.0).epsilon(1e-9));
}
