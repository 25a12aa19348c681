// Copyright 2026 The vickset Authors
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

namespace vickset {

/// Broad failure categories. The CLI maps these onto process exit codes.
enum class ErrorKind {
    Parse,         // malformed input text
    Validation,    // well-formed input with an invalid value
    Type,          // operation applied to the wrong kind of Value
    Domain,        // argument outside the operation's domain
    Precondition,  // caller broke a documented precondition
    Cap,           // enumeration size cap exceeded
};

class Error : public std::runtime_error {
  public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(what), kind_(kind) {}

    [[nodiscard]] ErrorKind kind() const noexcept { return kind_; }

  private:
    ErrorKind kind_;
};

class ParseError : public Error {
  public:
    ParseError(const std::string& what, std::size_t position)
        : Error(ErrorKind::Parse,
                what + " at offset " + std::to_string(position)),
          position_(position) {}

    [[nodiscard]] std::size_t position() const noexcept { return position_; }

  private:
    std::size_t position_;
};

class ValidationError : public Error {
  public:
    explicit ValidationError(const std::string& what)
        : Error(ErrorKind::Validation, what) {}
};

class TypeError : public Error {
  public:
    explicit TypeError(const std::string& what)
        : Error(ErrorKind::Type, what) {}
};

class DomainError : public Error {
  public:
    explicit DomainError(const std::string& what)
        : Error(ErrorKind::Domain, what) {}
};

class PreconditionError : public Error {
  public:
    explicit PreconditionError(const std::string& what)
        : Error(ErrorKind::Precondition, what) {}
};

class CapExceeded : public Error {
  public:
    explicit CapExceeded(const std::string& what)
        : Error(ErrorKind::Cap, what) {}
};

/// Exit code convention shared by every CLI subcommand.
inline int exit_code_for(ErrorKind kind) noexcept {
    switch (kind) {
        case ErrorKind::Parse:
            return 1;
        case ErrorKind::Cap:
            return 3;
        default:
            return 2;
    }
}

}  // namespace vickset
