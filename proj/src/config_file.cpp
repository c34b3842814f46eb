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

#include "kerrsu/config_file.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

namespace kerrsu {

namespace {

std::string_view trim(std::string_view s) {
    const auto ws = " \t\r\n";
    const auto b = s.find_first_not_of(ws);
    if (b == std::string_view::npos)
        return {};
    const auto e = s.find_last_not_of(ws);
    return s.substr(b, e - b + 1);
}

std::string where(const std::string &source, int line) {
    return source + ":" + std::to_string(line);
}

bool parse_plain(std::string_view s, double &out) {
    if (s.empty())
        return false;
    if (s.front() == '+')
        s.remove_prefix(1);
    auto res = std::from_chars(s.data(), s.data() + s.size(), out);
    return res.ec == std::errc() && res.ptr == s.data() + s.size();
}

} // namespace

const ConfigSection *ConfigDocument::section(std::string_view name) const {
    for (const auto &s : sections)
        if (s.name == name)
            return &s;
    return nullptr;
}

const std::vector<std::string_view> &known_sections() {
    static const std::vector<std::string_view> names = {"sweep", "figure",
                                                        "optimum"};
    return names;
}

double parse_number(std::string_view text) {
    const std::string_view s = trim(text);
    double v = 0.0;
    if (parse_plain(s, v))
        return v;
    const auto p = s.find("pi");
    if (p != std::string_view::npos) {
        std::string_view head = trim(s.substr(0, p));
        std::string_view tail = trim(s.substr(p + 2));
        double k = 1.0;
        if (!head.empty() && head.back() == '*')
            head = trim(head.substr(0, head.size() - 1));
        if (head == "-")
            k = -1.0;
        else if (!head.empty() && !parse_plain(head, k))
            throw ValidationError({"cannot parse number '" + std::string(s) + "'"});
        double div = 1.0;
        if (!tail.empty()) {
            if (tail.front() != '/' || !parse_plain(trim(tail.substr(1)), div) ||
                div == 0.0)
                throw ValidationError(
                    {"cannot parse number '" + std::string(s) + "'"});
        }
        return k * kPi / div;
    }
    throw ValidationError({"cannot parse number '" + std::string(s) + "'"});
}

ConfigDocument parse_config_text(const std::string &text,
                                 const std::string &source) {
    ConfigDocument doc;
    doc.source = source;
    std::istringstream in(text);
    std::string raw;
    int line = 0;
    ConfigSection *current = nullptr;
    std::vector<std::string> problems;
    while (std::getline(in, raw)) {
        ++line;
        std::string_view s = raw;
        const auto hash = s.find('#');
        if (hash != std::string_view::npos)
            s = s.substr(0, hash);
        s = trim(s);
        if (s.empty())
            continue;
        if (s.front() == '[') {
            if (s.back() != ']') {
                problems.push_back(where(source, line) +
                                   ": malformed section header");
                continue;
            }
            const std::string name(trim(s.substr(1, s.size() - 2)));
            const auto &known = known_sections();
            if (std::find(known.begin(), known.end(), name) == known.end()) {
                problems.push_back(where(source, line) + ": unknown section [" +
                                   name + "]");
                current = nullptr;
                continue;
            }
            if (doc.section(name)) {
                problems.push_back(where(source, line) +
                                   ": duplicate section [" + name + "]");
                continue;
            }
            doc.sections.push_back({name, {}});
            current = &doc.sections.back();
            continue;
        }
        const auto eq = s.find('=');
        if (eq == std::string_view::npos) {
            problems.push_back(where(source, line) + ": expected key = value");
            continue;
        }
        ConfigEntry e{std::string(trim(s.substr(0, eq))),
                      std::string(trim(s.substr(eq + 1))), line};
        if (e.key.empty()) {
            problems.push_back(where(source, line) + ": empty key");
            continue;
        }
        (current ? current->entries : doc.globals).push_back(std::move(e));
    }
    if (!problems.empty())
        throw ValidationError(std::move(problems));
    return doc;
}

ConfigDocument load_config_file(const std::string &path) {
    std::ifstream f(path, std::ios::binary);
    if (!f)
        throw IoError("cannot read config file '" + path + "'");
    std::ostringstream ss;
    ss << f.rdbuf();
    return parse_config_text(ss.str(), path);
}

InterferometerConfig config_from_document(const ConfigDocument &doc) {
    InterferometerConfig cfg;
    std::vector<std::string> problems;
    std::vector<std::string> seen;
    for (const auto &e : doc.globals) {
        double *field = config_field(cfg, e.key);
        if (!field) {
            problems.push_back(where(doc.source, e.line) + ": unknown key '" +
                               e.key + "'");
            continue;
        }
        if (std::find(seen.begin(), seen.end(), e.key) != seen.end()) {
            problems.push_back(where(doc.source, e.line) + ": duplicate key '" +
                               e.key + "'");
            continue;
        }
        seen.push_back(e.key);
        try {
            *field = parse_number(e.value);
        } catch (const ValidationError &err) {
            problems.push_back(where(doc.source, e.line) + ": " + err.what());
        }
    }
    if (!problems.empty())
        throw ValidationError(std::move(problems));
    return cfg;
}

} // namespace kerrsu
