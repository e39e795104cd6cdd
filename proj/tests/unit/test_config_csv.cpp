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

#include "nfwave/config.hpp"
#include "nfwave/csv.hpp"

#include <catch_amalgamated.hpp>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <limits>
#include <sstream>

using namespace nfwave;
using Catch::Approx;

TEST_CASE("defaults validate and describe the reference scenario", "[config]")
{
    ExperimentConfig c;
    REQUIRE_NOTHROW(c.validate());
    CHECK(c.array_config().n_antennas() == 256);
    CHECK(c.array_config().spacing() == Approx(c.array_config().wavelength() / 2.0));
    CHECK(c.training.trials == 1000);
    CHECK(c.training.distance == 20.0);
    CHECK(c.support.beta == 0.42);
}

TEST_CASE("parsing sections, comments and lists", "[config]")
{
    auto c = parse_config("; comment\n"
                          "[array]\n"
                          "n_antennas = 64   # trailing comment\n"
                          "aperture_convention = n\n"
                          "[training]\n"
                          "snr_db = -5, 0, 7.5\n"
                          "schemes = wdsw_je, perfect_csi\n"
                          "master_seed = 18446744073709551615\n"
                          "rate_convention = literal\n");
    CHECK(c.array.n_antennas == 64);
    CHECK(c.array.aperture_convention == ApertureConvention::n);
    CHECK(c.training.snr_db == std::vector<double>{-5.0, 0.0, 7.5});
    CHECK(c.training.schemes == std::vector<Scheme>{Scheme::wdsw_je, Scheme::perfect_csi});
    CHECK(c.training.master_seed == std::numeric_limits<std::uint64_t>::max());
    CHECK(c.training.rate_convention == RateConvention::literal);
}

TEST_CASE("unknown or malformed settings are hard errors", "[config]")
{
    CHECK_THROWS_AS(parse_config("[array]\nbogus = 1\n"), ConfigError);
    CHECK_THROWS_AS(parse_config("[nowhere]\nn_antennas = 1\n"), ConfigError);
    CHECK_THROWS_AS(parse_config("n_antennas = 1\n"), ConfigError);
    CHECK_THROWS_AS(parse_config("[array]\nn_antennas = many\n"), ConfigError);
    CHECK_THROWS_AS(parse_config("[array]\nn_antennas = 0\n"), ConfigError);
    CHECK_THROWS_AS(parse_config("[support]\nbeta = 1.5\n"), ConfigError);
    CHECK_THROWS_AS(parse_config("[training]\nschemes = magic\n"), ConfigError);
    CHECK_THROWS_AS(parse_config("[training]\ntrials = 0\n"), ConfigError);
    CHECK_THROWS_AS(parse_config("[training]\nasw_candidates = 2\n"), ConfigError);
    CHECK_THROWS_AS(load_config("/nonexistent/nfwave.ini"), ConfigError);
}

TEST_CASE("echo round-trips through the parser", "[config]")
{
    ExperimentConfig c;
    c.array.n_antennas = 128;
    c.user.direction_cosine = -0.123456789012345;
    c.training.snr_db = {3.0, 1e-3};
    c.training.master_seed = 987654321987654321ull;
    c.output.path = "ignored.csv";

    std::string section, text;
    for (const auto &line : c.echo())
    {
        const auto dot = line.find('.');
        const auto s = line.substr(0, dot);
        if (s != section)
            text += "[" + (section = s) + "]\n";
        text += line.substr(dot + 1) + "\n";
    }
    auto back = parse_config(text);
    CHECK(back.echo() == c.echo());
    CHECK(back.output.path.empty());
    for (const auto &line : c.echo())
        CHECK(line.find("output.path") == std::string::npos);
}

TEST_CASE("scheme names", "[config]")
{
    for (Scheme s : {Scheme::exhaustive, Scheme::asw_je, Scheme::wdsw_je, Scheme::perfect_csi})
        CHECK(scheme_from_string(to_string(s)) == s);
    CHECK_THROWS_AS(scheme_from_string("WDSW"), ConfigError);
}

TEST_CASE("number formatting is shortest round-trip", "[csv]")
{
    CHECK(format_number(0.1) == "0.1");
    CHECK(format_number(327.68) == "327.68");
    CHECK(format_number(-2.0) == "-2");
    CHECK(format_number(1e-300) == "1e-300");
    CHECK(format_number(std::numeric_limits<double>::quiet_NaN()) == "nan");
    CHECK(format_number(std::numeric_limits<double>::infinity()) == "inf");
    CHECK(format_number(-std::numeric_limits<double>::infinity()) == "-inf");
    for (double v : {1.0 / 3.0, 2.0 / 7.0 * 1e12, 6.02214076e23})
        CHECK(std::stod(format_number(v)) == v);
}

TEST_CASE("csv rendering and atomic writes", "[csv]")
{
    CsvTable t;
    t.comments = {"nfwave test", "seed = 1"};
    t.header = {"a", "b"};
    t.rows = {{"1", "2"}, {"3", ""}};
    CHECK(t.render() == "# nfwave test\n# seed = 1\na,b\n1,2\n3,\n");

    const auto dir = std::filesystem::temp_directory_path() / "nfwave_csv_test";
    std::filesystem::create_directories(dir);
    const auto path = dir / "out.csv";
    write_atomic(path, t.render());
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    CHECK(ss.str() == t.render());
    CHECK_FALSE(std::filesystem::exists(dir / "out.csv.tmp"));

    CHECK_THROWS(write_atomic(dir / "missing" / "x.csv", "x"));
    CHECK_FALSE(std::filesystem::exists(dir / "missing"));
    std::filesystem::remove_all(dir);
}
