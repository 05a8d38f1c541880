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

#include <span>
#include <string_view>
#include <vector>

#include "qf/ir/instruction.hpp"
#include "qf/stdlib/matrix.hpp"

namespace qf::stdlib {

/**
 * @brief Unitary of a catalog gate.
 *
 * For two-qubit gates the first operand is the high-order (left Kronecker) factor, so CX is
 * `|0><0| (x) I + |1><1| (x) X`. `U(theta, phi, lambda)` is
 * `[[cos(theta/2), -e^{i lambda} sin(theta/2)], [e^{i phi} sin(theta/2), e^{i(phi+lambda)} cos(theta/2)]]`.
 * Throws UnknownInstruction for non-gates (Measure, qmi) and ArityMismatch on a wrong
 * parameter count.
 */
CMatrix gateUnitary(ir::OpKind kind, std::span<const double> params = {});
CMatrix gateUnitary(std::string_view name, std::span<const double> params = {});

/// Unitary of a concrete gate instruction (ignores its qubit operands).
CMatrix gateUnitary(const ir::Instruction &instruction);

/// Every kind that has a unitary.
std::vector<ir::OpKind> gateKinds();

/**
 * @brief Rewrites one instruction into kinds from `allowed`.
 *
 * Rules: Sdg, Tdg and I become U phase gates; Swap becomes three CX; CPhase(l) becomes
 * U(0,0,l/2) on both qubits around two CX with U(0,0,-l/2) on the target. Symbolic angles are
 * scaled symbolically. Instructions already in `allowed` are returned unchanged; anything
 * that cannot be expressed yields an empty vector.
 */
std::vector<ir::Instruction> lowerInstruction(const ir::Instruction &instruction,
                                              std::span<const ir::OpKind> allowed);

/// `factor * p` for numeric or symbolic parameters.
ir::InstrParam scaleParam(const ir::InstrParam &p, double factor);

} // namespace qf::stdlib
