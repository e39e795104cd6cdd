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

#ifndef NFWAVE_CSV_HPP
#define NFWAVE_CSV_HPP

#include <filesystem>
#include <string>
#include <vector>

namespace nfwave
{
    // Shortest decimal text that parses back to the same double; locale independent.
    // Non-finite values print as inf, -inf and nan.
    std::string format_number(double value);

    struct CsvTable
    {
        std::vector<std::string> comments; // emitted as "# ..." lines before the header
        std::vector<std::string> header;
        std::vector<std::vector<std::string>> rows;

        std::string render() const;
    };

    // Writes to a sibling temporary file and renames it over `path`, so readers never see a
    // partial file. Throws std::runtime_error carrying the path on failure.
    void write_atomic(const std::filesystem::path &path, const std::string &content);

} // namespace nfwave

#endif
