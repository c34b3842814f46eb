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
 * Flat `key = value` configuration files.
 *
 *     # comment
 *     alpha = 100
 *     theta2 = pi
 *
 *     [sweep]
 *     axis1 = phi 0 2pi 200 open
 *
 * Keys before the first section header are InterferometerConfig fields. Keys
 * inside a section are interpreted by the consumer of that section. Unknown
 * keys and sections are hard errors, reported with their line number.
 */
#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "kerrsu/core_model.hpp"

namespace kerrsu {

struct ConfigEntry {
    std::string key;
    std::string value;
    int line = 0;
};

struct ConfigSection {
    std::string name;
    std::vector<ConfigEntry> entries;
};

struct ConfigDocument {
    std::string source;
    std::vector<ConfigEntry> globals;
    std::vector<ConfigSection> sections;

    [[nodiscard]] const ConfigSection *section(std::string_view name) const;
};

/// Section names accepted by the parser.
const std::vector<std::string_view> &known_sections();

ConfigDocument parse_config_text(const std::string &text,
                                 const std::string &source = "<text>");
/// Throws IoError if the file cannot be read.
ConfigDocument load_config_file(const std::string &path);

/**
 * Parses a real number. Accepts plain decimals plus `pi`, `<k>pi`, `<k>*pi`
 * and `pi/<k>`.
 */
double parse_number(std::string_view text);

/// Builds a configuration from the global keys; starts from the defaults.
InterferometerConfig config_from_document(const ConfigDocument &doc);

} // namespace kerrsu
