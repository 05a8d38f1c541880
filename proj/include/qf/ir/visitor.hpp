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

#include "qf/ir/instruction.hpp"

namespace qf::ir {

/**
 * @brief Double-dispatch target for instruction kinds.
 *
 * Every handler defaults to visitNull, so a visitor overrides only the kinds it cares about.
 */
class InstructionVisitor {
  public:
    virtual ~InstructionVisitor() = default;

    virtual void visitNull(const Instruction &) {}

    virtual void visitI(const Instruction &i) { visitNull(i); }
    virtual void visitX(const Instruction &i) { visitNull(i); }
    virtual void visitY(const Instruction &i) { visitNull(i); }
    virtual void visitZ(const Instruction &i) { visitNull(i); }
    virtual void visitH(const Instruction &i) { visitNull(i); }
    virtual void visitS(const Instruction &i) { visitNull(i); }
    virtual void visitSdg(const Instruction &i) { visitNull(i); }
    virtual void visitT(const Instruction &i) { visitNull(i); }
    virtual void visitTdg(const Instruction &i) { visitNull(i); }
    virtual void visitRx(const Instruction &i) { visitNull(i); }
    virtual void visitRy(const Instruction &i) { visitNull(i); }
    virtual void visitRz(const Instruction &i) { visitNull(i); }
    virtual void visitU(const Instruction &i) { visitNull(i); }
    virtual void visitCX(const Instruction &i) { visitNull(i); }
    virtual void visitCZ(const Instruction &i) { visitNull(i); }
    virtual void visitCPhase(const Instruction &i) { visitNull(i); }
    virtual void visitSwap(const Instruction &i) { visitNull(i); }
    virtual void visitMeasure(const Instruction &i) { visitNull(i); }
    virtual void visitQmi(const Instruction &i) { visitNull(i); }
};

/// Routes one instruction to the handler for its kind, regardless of the enabled flag.
void dispatch(const Instruction &instruction, InstructionVisitor &visitor);

} // namespace qf::ir
