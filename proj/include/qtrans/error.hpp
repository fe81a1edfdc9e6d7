// Copyright 2026 The qtrans Authors
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

namespace qtrans {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// A caller-supplied value is outside the accepted domain.
class InvalidArgument : public Error {
  public:
    using Error::Error;
};

/// Malformed text input; carries the 1-based line number.
class ParseError : public Error {
  public:
    ParseError(std::size_t line, const std::string &message)
        : Error("line " + std::to_string(line) + ": " + message), line_(line) {}

    std::size_t line() const { return line_; }

  private:
    std::size_t line_;
};

/// Amplitude left outside the ancilla-zero subspace after a run.
class AncillaLeak : public Error {
  public:
    AncillaLeak(const std::string &message, double residual)
        : Error(message), residual_(residual) {}

    double residual() const { return residual_; }

  private:
    double residual_;
};

class AncillaBudgetExceeded : public Error {
  public:
    using Error::Error;
};

/// A circuit was counted in a mode it has not been lowered for.
class ModeMismatch : public Error {
  public:
    using Error::Error;
};

} // namespace qtrans
