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
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "qf/ir/expression.hpp"

namespace qf::ir {

enum class OpKind {
    I,
    X,
    Y,
    Z,
    H,
    S,
    Sdg,
    T,
    Tdg,
    Rx,
    Ry,
    Rz,
    U,
    CX,
    CZ,
    CPhase,
    Swap,
    Measure,
    Qmi,
};

/// Static description of an instruction kind.
struct OpInfo {
    OpKind kind;
    std::string_view name;
    std::size_t nQubits;
    std::size_t nParams;
    bool annealing = false;
};

const OpInfo &opInfo(OpKind kind) noexcept;
std::span<const OpInfo> opCatalog() noexcept;

/// Case-insensitive lookup; accepts CNOT, u3 and similar spellings.
std::optional<OpKind> lookupOp(std::string_view name) noexcept;

struct TextParam {
    std::string value;
    friend bool operator==(const TextParam &, const TextParam &) = default;
};

using InstrParam = std::variant<std::int64_t, double, ParamExpr, TextParam>;

[[nodiscard]] inline bool isSymbolic(const InstrParam &p) noexcept {
    return std::holds_alternative<ParamExpr>(p);
}

/// Numeric value of a concrete parameter; throws SymbolicProgram for symbols and text.
double numericValue(const InstrParam &p);

/// Source-style rendering: integers, shortest reals, expression text, quoted text.
std::string toString(const InstrParam &p);

using VariableLookup = std::function<std::optional<double>(std::string_view)>;

/**
 * @brief One QASM-level operation.
 *
 * Measure records classical targets, which default to the measured qubits. Annealing
 * instructions keep their two sites in ascending order.
 */
class Instruction {
  public:
    Instruction(OpKind kind, std::vector<std::size_t> bits, std::vector<InstrParam> params = {},
                std::vector<std::size_t> cbits = {});

    [[nodiscard]] OpKind kind() const noexcept { return kind_; }
    [[nodiscard]] std::string_view name() const noexcept { return opInfo(kind_).name; }
    [[nodiscard]] const std::vector<std::size_t> &bits() const noexcept { return bits_; }
    [[nodiscard]] const std::vector<InstrParam> &params() const noexcept { return params_; }
    [[nodiscard]] const std::vector<std::size_t> &cbits() const noexcept { return cbits_; }
    [[nodiscard]] bool enabled() const noexcept { return enabled_; }

    void setEnabled(bool enabled) noexcept { enabled_ = enabled; }
    void setBits(std::vector<std::size_t> bits);
    void setParam(std::size_t index, InstrParam value);

    [[nodiscard]] bool isParameterized() const noexcept;
    [[nodiscard]] bool isMeasure() const noexcept { return kind_ == OpKind::Measure; }
    [[nodiscard]] bool isAnnealing() const noexcept { return kind_ == OpKind::Qmi; }

    /// Names of the free variables referenced by symbolic parameters.
    [[nodiscard]] std::vector<std::string> symbols() const;

    /// Copy with every symbol replaced by its value; UnboundSymbol when lookup misses.
    [[nodiscard]] Instruction evaluate(const VariableLookup &lookup) const;

    /// Real-valued parameters; throws SymbolicProgram when any is symbolic.
    [[nodiscard]] std::vector<double> numericParams() const;

    /// `Ry(q1, theta)` style rendering for logs.
    [[nodiscard]] std::string toString() const;

    friend bool operator==(const Instruction &, const Instruction &) = default;

  private:
    OpKind kind_;
    std::vector<std::size_t> bits_;
    std::vector<InstrParam> params_;
    std::vector<std::size_t> cbits_;
    bool enabled_ = true;
};

/// Validating factory: UnknownInstruction or ArityMismatch on bad input.
Instruction createInstruction(std::string_view name, std::vector<std::size_t> bits,
                              std::vector<InstrParam> params = {});

} // namespace qf::ir
