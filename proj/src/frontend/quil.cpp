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

#include <array>
#include <sstream>

#include "cursor.hpp"
#include "qf/frontend/dialects.hpp"

namespace qf::frontend {

using ir::OpKind;
using ir::Token;
using ir::TokenKind;

namespace {

constexpr std::array kQuilGates = {OpKind::I,  OpKind::X,  OpKind::Y,      OpKind::Z,
                                   OpKind::H,  OpKind::S,  OpKind::T,      OpKind::Rx,
                                   OpKind::Ry, OpKind::Rz, OpKind::U,      OpKind::CX,
                                   OpKind::CZ, OpKind::CPhase, OpKind::Swap, OpKind::Measure};

std::string quilName(OpKind kind) {
    switch (kind) {
    case OpKind::Rx: return "RX";
    case OpKind::Ry: return "RY";
    case OpKind::Rz: return "RZ";
    case OpKind::CX: return "CNOT";
    case OpKind::CPhase: return "CPHASE";
    case OpKind::Swap: return "SWAP";
    case OpKind::Measure: return "MEASURE";
    default: return std::string(ir::opInfo(kind).name);
    }
}

class QuilParser {
  public:
    QuilParser(const KernelUnit &unit, KernelBuilder &builder)
        : in_(unit.body, builder, false), b_(builder) {}

    void run() {
        while (!in_.atEnd()) {
            if (in_.peek().is(TokenKind::Newline) || in_.peek().isPunct(";")) {
                in_.next();
                continue;
            }
            line();
        }
    }

  private:
    void line() {
        const Token &name = in_.expectIdentifier("an instruction");
        if (b_.isKernel(name.text)) {
            b_.inlineCall(name, in_.callArguments());
        } else if (ir::lookupOp(name.text) == OpKind::Measure) {
            measure(name);
        } else {
            gate(name);
        }
        in_.accept(";");
        const Token &end = in_.peek();
        if (!end.is(TokenKind::Newline) && !end.is(TokenKind::End)) {
            b_.error(end, "expected end of line" + detail::Cursor::found(end));
        }
    }

    std::size_t qubit() {
        const Token &t = in_.next();
        if (!t.is(TokenKind::Integer)) {
            b_.error(t, "expected a qubit index" + detail::Cursor::found(t));
        }
        return std::stoul(t.text);
    }

    void measure(const Token &name) {
        std::size_t q = qubit();
        std::vector<std::size_t> cbits;
        if (in_.peek().is(TokenKind::Identifier)) {
            in_.next(); // named classical register, e.g. ro[0]
        }
        if (in_.accept("[")) {
            cbits.push_back(qubit());
            in_.expect("]");
        }
        b_.addInstruction(name, "Measure", {q}, {}, std::move(cbits));
    }

    void gate(const Token &name) {
        auto kind = ir::lookupOp(name.text);
        if (!kind || ir::opInfo(*kind).annealing) {
            b_.error(ErrorCode::UnknownInstruction, name, "unknown instruction '" + name.text + "'");
        }
        std::vector<ir::InstrParam> params;
        if (in_.accept("(")) {
            while (!in_.peek().isPunct(")")) {
                params.push_back(in_.param());
                if (!in_.accept(",")) {
                    break;
                }
            }
            in_.expect(")");
        }
        std::vector<std::size_t> bits;
        while (in_.peek().is(TokenKind::Integer)) {
            bits.push_back(qubit());
        }
        b_.addInstruction(name, name.text, std::move(bits), std::move(params));
    }

    detail::Cursor in_;
    KernelBuilder &b_;
};

} // namespace

ir::Composite QuilCompiler::compileKernel(const KernelUnit &unit,
                                          const KernelLookup &lookup) const {
    KernelBuilder builder(unit.header, lookup, ErrorCode::SyntaxError);
    QuilParser(unit, builder).run();
    return builder.finish();
}

std::string QuilCompiler::translate(const ir::Composite &composite) const {
    auto body = lowerForDialect(composite, kQuilGates, "quil");
    std::ostringstream out;
    out << "__qpu__ void " << composite.name() << "(qbit q";
    for (const auto &p : headerParameters(composite)) {
        out << ", double " << p;
    }
    out << ") {\n";
    for (const auto &inst : body) {
        out << "  " << quilName(inst.kind());
        if (!inst.params().empty()) {
            out << "(";
            for (std::size_t i = 0; i < inst.params().size(); ++i) {
                out << (i ? ", " : "") << paramText(inst.params()[i]);
            }
            out << ")";
        }
        for (auto q : inst.bits()) {
            out << " " << q;
        }
        if (inst.isMeasure()) {
            out << " [" << inst.cbits().front() << "]";
        }
        out << "\n";
    }
    out << "}\n";
    return out.str();
}

} // namespace qf::frontend
