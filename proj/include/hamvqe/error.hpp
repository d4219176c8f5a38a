// Copyright 2026 The hamvqe Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
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
#include <string_view>

namespace hamvqe {

/// Base class of every error raised by the library. `code()` is a short
/// machine-parsable tag (e.g. "E_PARSE") used by the command-line front end.
class Error : public std::runtime_error {
  public:
    Error(std::string_view code, const std::string &message)
        : std::runtime_error(message), code_(code) {}

    const std::string &code() const noexcept { return code_; }

  private:
    std::string code_;
};

/// Malformed textual input. `position` is the zero-based character offset
/// inside the parsed token (not the file).
class ParseError : public Error {
  public:
    ParseError(const std::string &message, std::size_t position)
        : Error("E_PARSE", message), position_(position) {}

    std::size_t position() const noexcept { return position_; }

  private:
    std::size_t position_;
};

/// A structurally valid input that violates a domain invariant.
class ValidationError : public Error {
  public:
    explicit ValidationError(const std::string &message) : Error("E_INVALID", message) {}
};

/// Pauli string made only of I and Z; it has no X<->Y substitute.
class NotSubstitutableError : public Error {
  public:
    explicit NotSubstitutableError(const std::string &message)
        : Error("E_NOT_SUBSTITUTABLE", message) {}
};

/// Operands act on a different number of qubits.
class DimensionMismatchError : public Error {
  public:
    explicit DimensionMismatchError(const std::string &message)
        : Error("E_DIMENSION", message) {}
};

/// Exponential of the all-identity string requested from the compiler.
class EmptyTermError : public Error {
  public:
    explicit EmptyTermError(const std::string &message) : Error("E_EMPTY_TERM", message) {}
};

/// A term named on the command line is not part of the Hamiltonian.
class UnknownTermError : public Error {
  public:
    explicit UnknownTermError(const std::string &message) : Error("E_UNKNOWN_TERM", message) {}
};

/// NaN/Inf encountered, norm underflow, or an iterative method that did not converge.
class NumericalError : public Error {
  public:
    explicit NumericalError(const std::string &message) : Error("E_NUMERICAL", message) {}
};

}  // namespace hamvqe
