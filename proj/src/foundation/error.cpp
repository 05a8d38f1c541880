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

#include "qf/foundation/error.hpp"

namespace qf {

std::string_view toString(ErrorCode code) noexcept {
    switch (code) {
    case ErrorCode::KeyMissing: return "KeyMissing";
    case ErrorCode::VariantMismatch: return "VariantMismatch";
    case ErrorCode::DuplicateService: return "DuplicateService";
    case ErrorCode::ServiceNotFound: return "ServiceNotFound";
    case ErrorCode::DoubleInitialize: return "DoubleInitialize";
    case ErrorCode::UnknownInstruction: return "UnknownInstruction";
    case ErrorCode::ArityMismatch: return "ArityMismatch";
    case ErrorCode::UnboundSymbol: return "UnboundSymbol";
    case ErrorCode::UnexpandedComposite: return "UnexpandedComposite";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::UndeclaredVariable: return "UndeclaredVariable";
    case ErrorCode::UntranslatableInstruction: return "UntranslatableInstruction";
    case ErrorCode::MissingDirective: return "MissingDirective";
    case ErrorCode::NameNotCompiled: return "NameNotCompiled";
    case ErrorCode::ComplexCoefficient: return "ComplexCoefficient";
    case ErrorCode::EmptyOperator: return "EmptyOperator";
    case ErrorCode::DisconnectedQubit: return "DisconnectedQubit";
    case ErrorCode::AlreadyMeasured: return "AlreadyMeasured";
    case ErrorCode::EmptyCounts: return "EmptyCounts";
    case ErrorCode::InvalidSize: return "InvalidSize";
    case ErrorCode::SymbolicProgram: return "SymbolicProgram";
    case ErrorCode::QubitOutOfRange: return "QubitOutOfRange";
    case ErrorCode::EmptyBuffer: return "EmptyBuffer";
    case ErrorCode::DegenerateChannel: return "DegenerateChannel";
    case ErrorCode::MixedModelProgram: return "MixedModelProgram";
    case ErrorCode::HttpError: return "HttpError";
    case ErrorCode::JobNotFound: return "JobNotFound";
    case ErrorCode::Timeout: return "Timeout";
    case ErrorCode::BadOption: return "BadOption";
    case ErrorCode::InitializationError: return "InitializationError";
    case ErrorCode::LengthMismatch: return "LengthMismatch";
    case ErrorCode::DistributionLengthMismatch: return "DistributionLengthMismatch";
    }
    return "Unknown";
}

Error::Error(ErrorCode code, const std::string &detail)
    : std::runtime_error(std::string(toString(code)) + ": " + detail), code_(code),
      detail_(detail) {}

SourceError::SourceError(ErrorCode code, std::size_t line, std::size_t column,
                         const std::string &detail)
    : Error(code, std::to_string(line) + ":" + std::to_string(column) + ": " + detail),
      line_(line), column_(column) {}

void fail(ErrorCode code, const std::string &detail) { throw Error(code, detail); }

} // namespace qf
