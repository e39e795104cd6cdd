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

#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <functional>
#include <sstream>

namespace nfwave
{
    std::string to_string(Scheme s)
    {
        switch (s)
        {
        case Scheme::exhaustive:
            return "exhaustive";
        case Scheme::asw_je:
            return "asw_je";
        case Scheme::wdsw_je:
            return "wdsw_je";
        case Scheme::perfect_csi:
            return "perfect_csi";
        }
        return "unknown";
    }

    Scheme scheme_from_string(const std::string &name)
    {
        for (Scheme s : {Scheme::exhaustive, Scheme::asw_je, Scheme::wdsw_je, Scheme::perfect_csi})
            if (to_string(s) == name)
                return s;
        throw ConfigError("unknown scheme '" + name + "' (expected exhaustive, asw_je, wdsw_je or perfect_csi)");
    }

    namespace
    {
        std::string trim(const std::string &s)
        {
            const auto b = s.find_first_not_of(" \t\r\n");
            if (b == std::string::npos)
                return {};
            const auto e = s.find_last_not_of(" \t\r\n");
            return s.substr(b, e - b + 1);
        }

        double parse_double(const std::string &key, const std::string &raw)
        {
            const std::string s = trim(raw);
            double v = 0.0;
            const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
            if (res.ec != std::errc() || res.ptr != s.data() + s.size())
                throw ConfigError(key + ": expected a number, got '" + raw + "'");
            return v;
        }

        long long parse_int(const std::string &key, const std::string &raw)
        {
            const std::string s = trim(raw);
            long long v = 0;
            const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
            if (res.ec != std::errc() || res.ptr != s.data() + s.size())
                throw ConfigError(key + ": expected an integer, got '" + raw + "'");
            return v;
        }

        std::uint64_t parse_u64(const std::string &key, const std::string &raw)
        {
            const std::string s = trim(raw);
            std::uint64_t v = 0;
            const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
            if (res.ec != std::errc() || res.ptr != s.data() + s.size())
                throw ConfigError(key + ": expected an unsigned integer, got '" + raw + "'");
            return v;
        }

        std::vector<std::string> split_list(const std::string &raw)
        {
            std::vector<std::string> out;
            std::stringstream ss(raw);
            std::string item;
            while (std::getline(ss, item, ','))
            {
                item = trim(item);
                if (!item.empty())
                    out.push_back(item);
            }
            return out;
        }

        struct Field
        {
            std::string name; // section.key
            std::function<void(const std::string &)> set;
            std::function<std::string()> get;
        };

        // The single list of recognized keys; drives parsing, validation of unknown keys and echo.
        std::vector<Field> fields(ExperimentConfig &c)
        {
            const auto num = [](const std::string &name, double &ref) {
                return Field{name, [&ref, name](const std::string &v) { ref = parse_double(name, v); },
                             [&ref] { return format_number(ref); }};
            };
            const auto integer = [](const std::string &name, int &ref) {
                return Field{name,
                             [&ref, name](const std::string &v) {
                                 const long long x = parse_int(name, v);
                                 if (x < -2147483647LL || x > 2147483647LL)
                                     throw ConfigError(name + ": value out of range");
                                 ref = int(x);
                             },
                             [&ref] { return std::to_string(ref); }};
            };

            std::vector<Field> f;
            f.push_back({"array.n_antennas",
                         [&c](const std::string &v) {
                             const long long n = parse_int("array.n_antennas", v);
                             if (n < 1)
                                 throw ConfigError("array.n_antennas: must be positive");
                             c.array.n_antennas = std::size_t(n);
                         },
                         [&c] { return std::to_string(c.array.n_antennas); }});
            f.push_back(num("array.carrier_freq", c.array.carrier_freq));
            f.push_back({"array.spacing",
                         [&c](const std::string &v) {
                             c.array.spacing = trim(v) == "half_wavelength" ? 0.0 : parse_double("array.spacing", v);
                         },
                         [&c] { return c.array.spacing == 0.0 ? std::string("half_wavelength")
                                                              : format_number(c.array.spacing); }});
            f.push_back({"array.aperture_convention",
                         [&c](const std::string &v) {
                             const std::string s = trim(v);
                             if (s == "n_minus_1")
                                 c.array.aperture_convention = ApertureConvention::n_minus_1;
                             else if (s == "n")
                                 c.array.aperture_convention = ApertureConvention::n;
                             else
                                 throw ConfigError("array.aperture_convention: expected n_minus_1 or n, got '" + v + "'");
                         },
                         [&c] {
                             return std::string(c.array.aperture_convention == ApertureConvention::n ? "n" : "n_minus_1");
                         }});
            f.push_back(num("array.wave_speed", c.array.wave_speed));

            f.push_back(num("user.distance", c.user.distance));
            f.push_back(num("user.direction_cosine", c.user.direction_cosine));
            f.push_back(num("user.path_gain", c.user.path_gain));
            f.push_back(num("user.path_gain_phase", c.user.path_gain_phase));

            f.push_back(num("support.beta", c.support.beta));
            f.push_back(integer("support.oversample", c.support.oversample));
            f.push_back(num("support.band_fraction", c.support.band_fraction));

            f.push_back(num("map.r_min", c.map.r_min));
            f.push_back(num("map.r_max", c.map.r_max));
            f.push_back(integer("map.r_points", c.map.r_points));
            f.push_back(num("map.omega_min", c.map.omega_min));
            f.push_back(num("map.omega_max", c.map.omega_max));
            f.push_back(integer("map.omega_points", c.map.omega_points));

            f.push_back({"training.snr_db",
                         [&c](const std::string &v) {
                             c.training.snr_db.clear();
                             for (const auto &item : split_list(v))
                                 c.training.snr_db.push_back(parse_double("training.snr_db", item));
                         },
                         [&c] {
                             std::string s;
                             for (std::size_t i = 0; i < c.training.snr_db.size(); ++i)
                                 s += (i ? ", " : "") + format_number(c.training.snr_db[i]);
                             return s;
                         }});
            f.push_back(integer("training.trials", c.training.trials));
            f.push_back(num("training.distance", c.training.distance));
            f.push_back(num("training.omega_min", c.training.omega_min));
            f.push_back(num("training.omega_max", c.training.omega_max));
            f.push_back({"training.schemes",
                         [&c](const std::string &v) {
                             c.training.schemes.clear();
                             for (const auto &item : split_list(v))
                                 c.training.schemes.push_back(scheme_from_string(item));
                         },
                         [&c] {
                             std::string s;
                             for (std::size_t i = 0; i < c.training.schemes.size(); ++i)
                                 s += (i ? ", " : "") + to_string(c.training.schemes[i]);
                             return s;
                         }});
            f.push_back(integer("training.asw_candidates", c.training.asw_candidates));
            f.push_back(integer("training.distance_rings", c.training.distance_rings));
            f.push_back(num("training.t_tot", c.training.t_tot));
            f.push_back(num("training.far_field_margin", c.training.far_field_margin));
            f.push_back({"training.rate_convention",
                         [&c](const std::string &v) {
                             const std::string s = trim(v);
                             if (s == "squared")
                                 c.training.rate_convention = RateConvention::squared;
                             else if (s == "literal")
                                 c.training.rate_convention = RateConvention::literal;
                             else
                                 throw ConfigError("training.rate_convention: expected squared or literal, got '" + v + "'");
                         },
                         [&c] {
                             return std::string(c.training.rate_convention == RateConvention::literal ? "literal" : "squared");
                         }});
            f.push_back({"training.master_seed",
                         [&c](const std::string &v) { c.training.master_seed = parse_u64("training.master_seed", v); },
                         [&c] { return std::to_string(c.training.master_seed); }});

            f.push_back(num("quadrature.rel_tol", c.quadrature.rel_tol));
            f.push_back({"output.path", [&c](const std::string &v) { c.output.path = trim(v); },
                         [&c] { return c.output.path; }});
            return f;
        }
    } // namespace

    ArrayConfig ExperimentConfig::array_config() const
    {
        const double spacing = this->array.spacing == 0.0 ? 0.5 * this->array.wave_speed / this->array.carrier_freq
                                                          : this->array.spacing;
        return ArrayConfig(this->array.n_antennas, this->array.carrier_freq, spacing, this->array.aperture_convention,
                           this->array.wave_speed);
    }

    UserState ExperimentConfig::user_state() const
    {
        return UserState{user.distance, user.direction_cosine, std::polar(user.path_gain, user.path_gain_phase)};
    }

    TrainingConfig ExperimentConfig::training_config() const
    {
        TrainingConfig t;
        t.support = support;
        t.asw_candidates = training.asw_candidates;
        t.distance_rings = training.distance_rings;
        t.t_tot = training.t_tot;
        t.far_field_margin = training.far_field_margin;
        t.rate_convention = training.rate_convention;
        return t;
    }

    QuadratureOptions ExperimentConfig::quadrature_options() const
    {
        QuadratureOptions q;
        q.rel_tol = quadrature.rel_tol;
        return q;
    }

    void ExperimentConfig::validate() const
    {
        try
        {
            (void)array_config();
            user_state().validate();
            support.validate();
            training_config().validate();
        }
        catch (const std::invalid_argument &e)
        {
            throw ConfigError(e.what());
        }
        if (!(user.path_gain > 0.0))
            throw ConfigError("user.path_gain: must be positive");
        if (!(map.r_min > 0.0 && map.r_max >= map.r_min) || map.r_points < 1)
            throw ConfigError("map: need 0 < r_min <= r_max and r_points >= 1");
        if (!(map.omega_min >= -1.0 && map.omega_max <= 1.0 && map.omega_min <= map.omega_max) || map.omega_points < 1)
            throw ConfigError("map: need -1 <= omega_min <= omega_max <= 1 and omega_points >= 1");
        if (training.trials < 1)
            throw ConfigError("training.trials: must be >= 1");
        if (training.snr_db.empty())
            throw ConfigError("training.snr_db: list must not be empty");
        for (double s : training.snr_db)
            if (!std::isfinite(s))
                throw ConfigError("training.snr_db: values must be finite");
        if (training.schemes.empty())
            throw ConfigError("training.schemes: list must not be empty");
        if (!(training.distance > 0.0))
            throw ConfigError("training.distance: must be positive");
        if (!(training.omega_min >= -1.0 && training.omega_max <= 1.0 && training.omega_min <= training.omega_max))
            throw ConfigError("training: need -1 <= omega_min <= omega_max <= 1");
        if (!(quadrature.rel_tol > 0.0))
            throw ConfigError("quadrature.rel_tol: must be positive");
    }

    std::vector<std::string> ExperimentConfig::echo() const
    {
        ExperimentConfig copy = *this;
        std::vector<std::string> lines;
        for (const auto &f : fields(copy))
            if (f.name != "output.path") // where the file lands does not affect its content
                lines.push_back(f.name + " = " + f.get());
        return lines;
    }

    namespace
    {
        // The INI reader only understands full-line comments; drop "value  # note" tails too.
        std::string strip_inline_comments(const std::string &text)
        {
            std::istringstream in(text);
            std::string line, out;
            while (std::getline(in, line))
            {
                for (std::size_t i = 1; i < line.size(); ++i)
                    if ((line[i] == '#' || line[i] == ';') && std::isspace(static_cast<unsigned char>(line[i - 1])))
                    {
                        line.erase(i);
                        break;
                    }
                out += line;
                out += '\n';
            }
            return out;
        }
    } // namespace

    ExperimentConfig parse_config(const std::string &text)
    {
        namespace pt = boost::property_tree;
        pt::ptree tree;
        std::istringstream is(strip_inline_comments(text));
        try
        {
            pt::ini_parser::read_ini(is, tree);
        }
        catch (const pt::ini_parser_error &e)
        {
            throw ConfigError(std::string("config: ") + e.what());
        }

        ExperimentConfig cfg;
        auto table = fields(cfg);
        for (const auto &[section, body] : tree)
        {
            if (body.empty() && !body.data().empty())
                throw ConfigError("config: key '" + section + "' must live inside a [section]");
            const std::string prefix = section + ".";
            if (std::none_of(table.begin(), table.end(), [&](const Field &f) { return f.name.rfind(prefix, 0) == 0; }))
                throw ConfigError("config: unknown section [" + section + "]");
            for (const auto &[key, value] : body)
            {
                const std::string name = section + "." + key;
                auto it = std::find_if(table.begin(), table.end(), [&](const Field &f) { return f.name == name; });
                if (it == table.end())
                    throw ConfigError("config: unknown key '" + name + "'");
                it->set(value.get_value<std::string>());
            }
        }
        cfg.validate();
        return cfg;
    }

    ExperimentConfig load_config(const std::filesystem::path &path)
    {
        std::ifstream is(path, std::ios::binary);
        if (!is)
            throw ConfigError("cannot open config file " + path.string());
        std::ostringstream ss;
        ss << is.rdbuf();
        try
        {
            return parse_config(ss.str());
        }
        catch (const ConfigError &e)
        {
            throw ConfigError(path.string() + ": " + e.what());
        }
    }

} // namespace nfwave
