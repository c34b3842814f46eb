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

#include "kerrsu/core_model.hpp"

#include <cmath>
#include <sstream>

namespace kerrsu {

namespace {

std::string join_problems(const std::vector<std::string> &problems) {
    std::ostringstream os;
    os << "invalid configuration: ";
    for (std::size_t i = 0; i < problems.size(); ++i) {
        if (i)
            os << "; ";
        os << problems[i];
    }
    return os.str();
}

} // namespace

ValidationError::ValidationError(std::vector<std::string> problems)
    : Error(join_problems(problems)), problems_(std::move(problems)) {}

double reduce_angle(double angle) {
    double r = std::fmod(angle, kTwoPi);
    if (r < 0.0)
        r += kTwoPi;
    // fmod of a value just below a multiple of 2pi can round up to 2pi
    if (r >= kTwoPi)
        r = 0.0;
    return r;
}

InterferometerConfig InterferometerConfig::canonical() const {
    InterferometerConfig c = *this;
    c.theta1 = reduce_angle(theta1);
    c.theta2 = reduce_angle(theta2);
    c.phi = reduce_angle(phi);
    return c;
}

const std::vector<std::string_view> &config_field_names() {
    static const std::vector<std::string_view> names = {
        "alpha", "gamma", "r1", "r2", "theta1", "theta2", "phi", "mu", "eta"};
    return names;
}

double *config_field(InterferometerConfig &cfg, std::string_view name) {
    if (name == "alpha")
        return &cfg.alpha;
    if (name == "gamma")
        return &cfg.gamma;
    if (name == "r1")
        return &cfg.r1;
    if (name == "r2")
        return &cfg.r2;
    if (name == "theta1")
        return &cfg.theta1;
    if (name == "theta2")
        return &cfg.theta2;
    if (name == "phi")
        return &cfg.phi;
    if (name == "mu")
        return &cfg.mu;
    if (name == "eta")
        return &cfg.eta;
    return nullptr;
}

double config_field_value(const InterferometerConfig &cfg,
                          std::string_view name) {
    auto copy = cfg;
    const double *p = config_field(copy, name);
    if (!p)
        throw ValidationError({"unknown parameter '" + std::string(name) + "'"});
    return *p;
}

std::string_view to_string(DetectionScheme scheme) {
    return scheme == DetectionScheme::si ? "si" : "hd";
}

std::optional<DetectionScheme> parse_scheme(std::string_view text) {
    if (text == "si")
        return DetectionScheme::si;
    if (text == "hd")
        return DetectionScheme::hd;
    return std::nullopt;
}

double kerr_gamma(double chi3, double length, double velocity) {
    if (!(length > 0.0))
        throw DomainError("kerr_gamma: length must be positive");
    if (!(velocity > 0.0))
        throw DomainError("kerr_gamma: velocity must be positive");
    return chi3 * length / velocity;
}

InterferometerConfig validate_config(const InterferometerConfig &cfg) {
    std::vector<std::string> problems;
    const auto &names = config_field_names();
    for (auto name : names) {
        if (!std::isfinite(config_field_value(cfg, name)))
            problems.push_back(std::string(name) + " not finite");
    }
    if (cfg.alpha < 0.0)
        problems.emplace_back("alpha negative");
    if (cfg.gamma < 0.0)
        problems.emplace_back("gamma negative");
    if (cfg.r1 < 0.0)
        problems.emplace_back("r1 negative");
    if (cfg.r2 < 0.0)
        problems.emplace_back("r2 negative");
    if (cfg.r1 > kSqueezingCeiling)
        problems.emplace_back("r1 above 10");
    if (cfg.r2 > kSqueezingCeiling)
        problems.emplace_back("r2 above 10");
    if (!(cfg.mu > 0.0 && cfg.mu <= 1.0))
        problems.emplace_back("mu out of (0,1]");
    if (!(cfg.eta > 0.0 && cfg.eta <= 1.0))
        problems.emplace_back("eta out of (0,1]");
    if (!problems.empty())
        throw ValidationError(std::move(problems));
    return cfg;
}

InterferometerConfig validate_for_analytic(const InterferometerConfig &cfg) {
    validate_config(cfg);
    if (cfg.gamma > kGammaCeiling)
        throw ValidationError(
            {"gamma above 1e-3: outside linearization validity"});
    return cfg;
}

} // namespace kerrsu
