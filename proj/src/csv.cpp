// Copyright 2026 The kerrsu Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "kerrsu/csv.hpp"

#include <array>
#include <charconv>
#include <fstream>

#include "kerrsu/errors.hpp"

namespace kerrsu {

std::string format_double(double v) {
    if (v == 0.0)
        return "0"; // also folds -0
    std::array<char, 64> buf{};
    auto res = std::to_chars(buf.data(), buf.data() + buf.size(), v);
    return std::string(buf.data(), res.ptr);
}

std::string format_cell(const std::optional<double> &v) {
    return v ? format_double(*v) : std::string();
}

void CsvTable::add_row(std::vector<std::string> row) {
    if (row.size() != header_.size())
        throw IoError("csv row width does not match header");
    rows_.push_back(std::move(row));
}

std::string CsvTable::str() const {
    std::string out;
    auto emit = [&](const std::vector<std::string> &r) {
        for (std::size_t i = 0; i < r.size(); ++i) {
            if (i)
                out += ',';
            out += r[i];
        }
        out += '\n';
    };
    emit(header_);
    for (const auto &r : rows_)
        emit(r);
    return out;
}

void CsvTable::write(const std::string &path) const {
    std::ofstream f(path, std::ios::binary | std::ios::trunc);
    if (!f)
        throw IoError("cannot open '" + path + "' for writing");
    const std::string s = str();
    f.write(s.data(), static_cast<std::streamsize>(s.size()));
    if (!f)
        throw IoError("write to '" + path + "' failed");
}

} // namespace kerrsu
