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
 * Exception types shared by every module. Each maps onto one CLI exit code.
 */
#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace kerrsu {

/// Base class; never thrown directly.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// A physical parameter or configuration value is out of its allowed range.
class ValidationError : public Error {
  public:
    explicit ValidationError(std::vector<std::string> problems);
    [[nodiscard]] const std::vector<std::string> &problems() const noexcept {
        return problems_;
    }

  private:
    std::vector<std::string> problems_;
};

/// Argument outside the mathematical domain of an operation.
class DomainError : public Error {
  public:
    using Error::Error;
};

/// Lossy configuration passed to a lossless-only operation (or vice versa).
class WrongOperationError : public Error {
  public:
    using Error::Error;
};

/// d<A>/dphi vanishes: the error-propagation quotient is undefined.
class StationaryPointError : public Error {
  public:
    StationaryPointError()
        : Error("stationary point: sensitivity undefined") {}
};

/// Number statistics make the Fisher-information quotient 0/0 or negative.
class DegenerateStatisticsError : public Error {
  public:
    explicit DegenerateStatisticsError(const std::string &what)
        : Error("degenerate statistics: " + what) {}
};

/// Fock-space truncation cannot meet the requested budget.
class TruncationError : public Error {
  public:
    TruncationError(const std::string &what, int suggested_n_max)
        : Error("truncation budget exceeded: " + what),
          suggested_n_max_(suggested_n_max) {}
    [[nodiscard]] int suggested_n_max() const noexcept {
        return suggested_n_max_;
    }

  private:
    int suggested_n_max_;
};

class IoError : public Error {
  public:
    using Error::Error;
};

} // namespace kerrsu
