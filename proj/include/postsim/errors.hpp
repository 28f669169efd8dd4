// Copyright 2026 The postsim Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace postsim {

/// Base class for all errors raised by the simulator.
class SimError : public std::runtime_error {
  public:
    explicit SimError(const std::string &what) : std::runtime_error(what) {}
};

/// Invalid argument to an operation (bad qubit index, arity mismatch, ...).
class InputError : public SimError {
  public:
    explicit InputError(const std::string &what) : SimError(what) {}
};

/// Malformed circuit/state/table text. Carries a 1-based line number and,
/// when known, a 1-based column.
class ParseError : public SimError {
  public:
    ParseError(const std::string &what, std::size_t line, std::size_t column = 0)
        : SimError("line " + std::to_string(line) +
                   (column ? ":" + std::to_string(column) : "") + ": " + what),
          line_(line), column_(column) {}

    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }

  private:
    std::size_t line_;
    std::size_t column_;
};

/// Postselection asked to condition on an event of (numerically) zero
/// probability; the conditional state would be meaningless.
class NullPostselectionError : public SimError {
  public:
    explicit NullPostselectionError(const std::string &what) : SimError(what) {}
};

/// Requested simulation exceeds the dense-statevector capacity.
class CapacityError : public SimError {
  public:
    explicit CapacityError(const std::string &what) : SimError(what) {}
};

/// Closed-form prediction is undefined for the given parameters.
class PredictionError : public SimError {
  public:
    explicit PredictionError(const std::string &what) : SimError(what) {}
};

/// Promise violation (e.g. a majority table with an exact tie).
class PromiseError : public SimError {
  public:
    explicit PromiseError(const std::string &what) : SimError(what) {}
};

} // namespace postsim
