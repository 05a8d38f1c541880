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

#include <optional>
#include <string>
#include <vector>

#include "qf/foundation/het_map.hpp"
#include "qf/ir/composite.hpp"
#include "qf/observable/pauli.hpp"

namespace qf::stdlib {

/// Qubit range from `nq` (meaning [0, nq)) or `start`/`end` (half-open).
std::optional<std::pair<std::size_t, std::size_t>> qubitRange(const HetMap &options,
                                                              std::string &diagnostic);

/// `gate` on every qubit of the range; nullopt (with diagnostic) when options are missing,
/// the gate is not a one-qubit fixed gate, or the range is empty.
std::optional<std::vector<ir::Instruction>> expandRange(const HetMap &options,
                                                        std::string &diagnostic);

/// Textbook QFT with the lowest index as most significant qubit, including the final swaps.
std::optional<std::vector<ir::Instruction>> expandQft(const HetMap &options,
                                                      std::string &diagnostic);

/**
 * @brief One first-order Trotter step of exp(+i * variable * H).
 *
 * Per term c*P: rotate X sites with H and Y sites with Rx(pi/2), CX ladder onto the last
 * site, Rz(-2*c*variable) there, then undo the ladder and rotations. Identity terms are a
 * global phase and are skipped. Throws ComplexCoefficient or EmptyOperator.
 */
std::vector<ir::Instruction> expITheta(const obs::PauliOperator &generator,
                                       const std::string &variable);

class RangeGenerator final : public ir::CircuitGenerator {
  public:
    [[nodiscard]] std::string name() const override { return "range"; }
    bool generate(ir::Composite &target, const HetMap &options,
                  std::string &diagnostic) const override;
};

class QftGenerator final : public ir::CircuitGenerator {
  public:
    [[nodiscard]] std::string name() const override { return "qft"; }
    bool generate(ir::Composite &target, const HetMap &options,
                  std::string &diagnostic) const override;
};

/// Options "pauli" or "fermion" (text); the single variable is the composite's variable.
class ExpIThetaGenerator final : public ir::CircuitGenerator {
  public:
    [[nodiscard]] std::string name() const override { return "exp_i_theta"; }
    bool generate(ir::Composite &target, const HetMap &options,
                  std::string &diagnostic) const override;
};

} // namespace qf::stdlib
