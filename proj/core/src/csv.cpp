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

#include "nfwave/csv.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <stdexcept>
#include <system_error>

namespace nfwave
{
    std::string format_number(double value)
    {
        if (std::isnan(value))
            return "nan";
        if (std::isinf(value))
            return value > 0 ? "inf" : "-inf";
        std::array<char, 64> buf{};
        const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), value);
        if (res.ec != std::errc())
            throw std::runtime_error("format_number: conversion failed");
        return std::string(buf.data(), res.ptr);
    }

    std::string CsvTable::render() const
    {
        std::string out;
        for (const auto &c : comments)
            out += "# " + c + "\n";
        const auto line = [&out](const std::vector<std::string> &cells) {
            for (std::size_t i = 0; i < cells.size(); ++i)
            {
                if (i)
                    out += ',';
                out += cells[i];
            }
            out += '\n';
        };
        line(header);
        for (const auto &r : rows)
            line(r);
        return out;
    }

    void write_atomic(const std::filesystem::path &path, const std::string &content)
    {
        namespace fs = std::filesystem;
        fs::path tmp = path;
        tmp += ".tmp";
        {
            std::ofstream os(tmp, std::ios::binary | std::ios::trunc);
            if (!os)
                throw std::runtime_error("cannot open " + tmp.string() + " for writing");
            os.write(content.data(), std::streamsize(content.size()));
            os.flush();
            if (!os)
            {
                std::error_code ec;
                fs::remove(tmp, ec);
                throw std::runtime_error("write failed for " + tmp.string());
            }
        }
        std::error_code ec;
        fs::rename(tmp, path, ec);
        if (ec)
        {
            std::error_code ignored;
            fs::remove(tmp, ignored);
            throw std::runtime_error("cannot move output into place at " + path.string() + ": " + ec.message());
        }
    }

} // namespace nfwave
