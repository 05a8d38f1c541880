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

#include "qf/ir/visitor.hpp"

namespace qf::ir {

void dispatch(const Instruction &instruction, InstructionVisitor &visitor) {
    switch (instruction.kind()) {
    case OpKind::I:
        return visitor.visitI(instruction);
    case OpKind::X:
        return visitor.visitX(instruction);
    case OpKind::Y:
        return visitor.visitY(instruction);
    case OpKind::Z:
        return visitor.visitZ(instruction);
    case OpKind::H:
        return visitor.visitH(instruction);
    case OpKind::S:
        return visitor.visitS(instruction);
    case OpKind::Sdg:
        return visitor.visitSdg(instruction);
    case OpKind::T:
        return visitor.visitT(instruction);
    case OpKind::Tdg:
        return visitor.visitTdg(instruction);
    case OpKind::Rx:
        return visitor.visitRx(instruction);
    case OpKind::Ry:
        return visitor.visitRy(instruction);
    case OpKind::Rz:
        return visitor.visitRz(instruction);
    case OpKind::U:
        return visitor.visitU(instruction);
    case OpKind::CX:
        return visitor.visitCX(instruction);
    case OpKind::CZ:
        return visitor.visitCZ(instruction);
    case OpKind::CPhase:
        return visitor.visitCPhase(instruction);
    case OpKind::Swap:
        return visitor.visitSwap(instruction);
    case OpKind::Measure:
        return visitor.visitMeasure(instruction);
    case OpKind::Qmi:
        return visitor.visitQmi(instruction);
    }
    visitor.visitNull(instruction);
}

} // namespace qf::ir
