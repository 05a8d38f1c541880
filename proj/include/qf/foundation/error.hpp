// Copyright 2026 The qframe Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

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

namespace qf {

/**
 * @brief Machine-checkable classification of every failure the framework reports.
 */
enum class ErrorCode {
    // foundation
    KeyMissing,
    VariantMismatch,
    DuplicateService,
    ServiceNotFound,
    DoubleInitialize,
    // ir
    UnknownInstruction,
    ArityMismatch,
    UnboundSymbol,
    UnexpandedComposite,
    ParseError,
    // frontend
    SyntaxError,
    UndeclaredVariable,
    UntranslatableInstruction,
    MissingDirective,
    NameNotCompiled,
    // stdlib / observable
    ComplexCoefficient,
    EmptyOperator,
    DisconnectedQubit,
    AlreadyMeasured,
    EmptyCounts,
    // backend
    InvalidSize,
    SymbolicProgram,
    QubitOutOfRange,
    EmptyBuffer,
    DegenerateChannel,
    MixedModelProgram,
    HttpError,
    JobNotFound,
    Timeout,
    // algorithm
    BadOption,
    InitializationError,
    LengthMismatch,
    DistributionLengthMismatch,
};

std::string_view toString(ErrorCode code) noexcept;

/**
 * @brief Base exception for all framework errors.
 *
 * The message is prefixed with the code name, e.g. `KeyMissing: shots`.
 */
class Error : public std::runtime_error {
  public:
    Error(ErrorCode code, const std::string &detail);

    [[nodiscard]] ErrorCode code() const noexcept { return code_; }
    [[nodiscard]] const std::string &detail() const noexcept { return detail_; }

  private:
    ErrorCode code_;
    std::string detail_;
};

/// Error carrying a 1-based source position (parsers, JSON loading).
class SourceError : public Error {
  public:
    SourceError(ErrorCode code, std::size_t line, std::size_t column,
                const std::string &detail);

    [[nodiscard]] std::size_t line() const noexcept { return line_; }
    [[nodiscard]] std::size_t column() const noexcept { return column_; }

  private:
    std::size_t line_;
    std::size_t column_;
};

[[noreturn]] void fail(ErrorCode code, const std::string &detail);

} // namespace qf
