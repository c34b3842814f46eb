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

/**
 * @file
 * Deterministic CSV output: shortest round-trip doubles, fixed column order.
 */
#pragma once

#include <optional>
#include <string>
#include <vector>

namespace kerrsu {

/// Shortest decimal string that parses back to exactly `v`.
std::string format_double(double v);

/// Empty string for an undefined value.
std::string format_cell(const std::optional<double> &v);

class CsvTable {
  public:
    explicit CsvTable(std::vector<std::string> header)
        : header_(std::move(header)) {}

    void add_row(std::vector<std::string> row);
    [[nodiscard]] const std::vector<std::string> &header() const {
        return header_;
    }
    [[nodiscard]] const std::vector<std::vector<std::string>> &rows() const {
        return rows_;
    }
    [[nodiscard]] std::string str() const;
    /// Throws IoError on failure.
    void write(const std::string &path) const;

  private:
    std::vector<std::string> header_;
    std::vector<std::vector<std::string>> rows_;
};

} // namespace kerrsu
