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

#include <algorithm>
#include <array>
#include <map>
#include <numbers>
#include <sstream>

#include "cursor.hpp"
#include "qf/frontend/dialects.hpp"

namespace qf::frontend {

using ir::OpKind;
using ir::Token;
using ir::TokenKind;

namespace {

struct QasmGate {
    std::string_view name;
    OpKind kind;
};

// u1/p are phase gates and map to U(0, 0, lambda).
constexpr std::array<QasmGate, 22> kQasmGates = {{
    {"id", OpKind::I},    {"x", OpKind::X},       {"y", OpKind::Y},        {"z", OpKind::Z},
    {"h", OpKind::H},     {"s", OpKind::S},       {"sdg", OpKind::Sdg},    {"t", OpKind::T},
    {"tdg", OpKind::Tdg}, {"rx", OpKind::Rx},     {"ry", OpKind::Ry},      {"rz", OpKind::Rz},
    {"u3", OpKind::U},    {"u", OpKind::U},       {"U", OpKind::U},        {"cx", OpKind::CX},
    {"CX", OpKind::CX},   {"cz", OpKind::CZ},     {"cp", OpKind::CPhase},  {"cu1", OpKind::CPhase},
    {"swap", OpKind::Swap}, {"u1", OpKind::U},
}};

std::string qasmName(OpKind kind) {
    switch (kind) {
    case OpKind::I: return "id";
    case OpKind::U: return "u3";
    case OpKind::CPhase: return "cp";
    default: {
        std::string name(ir::opInfo(kind).name);
        std::transform(name.begin(), name.end(), name.begin(),
                       [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
        return name;
    }
    }
}

class QasmParser {
  public:
    QasmParser(const KernelUnit &unit, KernelBuilder &builder)
        : in_(unit.body, builder, true), b_(builder) {}

    void run() {
        while (!in_.atEnd()) {
            if (in_.accept(";")) {
                continue;
            }
            statement();
        }
    }

  private:
    void statement() {
        const Token &name = in_.expectIdentifier("a statement");
        if (name.text == "OPENQASM") {
            const Token &version = in_.next();
            if (!version.is(TokenKind::Real) || version.text.rfind("2.", 0) != 0) {
                b_.error(version, "only OPENQASM 2.x is supported");
            }
        } else if (name.text == "include") {
            if (!in_.next().is(TokenKind::String)) {
                b_.error(name, "include expects a file name string");
            }
        } else if (name.text == "qreg" || name.text == "creg") {
            declare(name.text == "qreg" ? qregs_ : cregs_, name.text == "qreg" ? nQubits_ : nBits_);
        } else if (name.text == "measure") {
            std::size_t q = reference(qregs_, nQubits_);
            in_.expect("->");
            std::size_t c = reference(cregs_, nBits_);
            b_.addInstruction(name, "Measure", {q}, {}, {c});
        } else if (b_.isKernel(name.text)) {
            b_.inlineCall(name, in_.callArguments());
        } else {
            gate(name);
        }
        in_.expect(";");
    }

    void declare(std::map<std::string, std::size_t, std::less<>> &regs, std::size_t &total) {
        const Token &reg = in_.expectIdentifier("a register name");
        in_.expect("[");
        long size = in_.index();
        in_.expect("]");
        if (regs.contains(reg.text)) {
            b_.error(reg, "register '" + reg.text + "' declared twice");
        }
        regs[reg.text] = total;
        total += static_cast<std::size_t>(size);
    }

    /// `reg[i]`; undeclared registers are allowed only when none were declared.
    std::size_t reference(const std::map<std::string, std::size_t, std::less<>> &regs,
                          std::size_t /*declaredSize*/) {
        const Token &reg = in_.expectIdentifier("a register reference");
        std::size_t offset = 0;
        if (auto it = regs.find(reg.text); it != regs.end()) {
            offset = it->second;
        } else if (!regs.empty()) {
            b_.error(reg, "undeclared register '" + reg.text + "'");
        }
        in_.expect("[");
        long index = in_.index();
        in_.expect("]");
        return offset + static_cast<std::size_t>(index);
    }

    void gate(const Token &name) {
        const auto *def = std::find_if(kQasmGates.begin(), kQasmGates.end(),
                                       [&](const QasmGate &g) { return g.name == name.text; });
        if (def == kQasmGates.end()) {
            b_.error(ErrorCode::UnknownInstruction, name, "unknown gate '" + name.text + "'");
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
        if (name.text == "u1" && params.size() == 1) {
            params = {0.0, 0.0, params.front()};
        }
        std::vector<std::size_t> bits{reference(qregs_, nQubits_)};
        while (in_.accept(",")) {
            bits.push_back(reference(qregs_, nQubits_));
        }
        b_.addInstruction(name, ir::opInfo(def->kind).name, std::move(bits), std::move(params));
    }

    detail::Cursor in_;
    KernelBuilder &b_;
    std::map<std::string, std::size_t, std::less<>> qregs_;
    std::map<std::string, std::size_t, std::less<>> cregs_;
    std::size_t nQubits_ = 0;
    std::size_t nBits_ = 0;
};

} // namespace

ir::Composite OpenQasmCompiler::compileKernel(const KernelUnit &unit,
                                              const KernelLookup &lookup) const {
    KernelBuilder builder(unit.header, lookup, ErrorCode::SyntaxError);
    QasmParser(unit, builder).run();
    return builder.finish();
}

std::string OpenQasmCompiler::translate(const ir::Composite &composite) const {
    static constexpr std::array kAllowed = {
        OpKind::I,  OpKind::X,  OpKind::Y,  OpKind::Z,  OpKind::H,      OpKind::S,
        OpKind::Sdg, OpKind::T, OpKind::Tdg, OpKind::Rx, OpKind::Ry,    OpKind::Rz,
        OpKind::U,  OpKind::CX, OpKind::CZ, OpKind::CPhase, OpKind::Swap, OpKind::Measure};
    auto body = lowerForDialect(composite, kAllowed, "openqasm");
    std::size_t nQubits = std::max<std::size_t>(composite.nQubits(), 1);
    std::size_t nBits = nQubits;
    for (const auto &inst : body) {
        for (auto c : inst.cbits()) {
            nBits = std::max(nBits, c + 1);
        }
    }
    std::ostringstream out;
    out << "__qpu__ void " << composite.name() << "(qbit q";
    for (const auto &p : headerParameters(composite)) {
        out << ", double " << p;
    }
    out << ") {\n  OPENQASM 2.0;\n  include \"qelib1.inc\";\n";
    out << "  qreg q[" << nQubits << "];\n  creg c[" << nBits << "];\n";
    for (const auto &inst : body) {
        if (inst.isMeasure()) {
            out << "  measure q[" << inst.bits().front() << "] -> c[" << inst.cbits().front()
                << "];\n";
            continue;
        }
        out << "  " << qasmName(inst.kind());
        if (!inst.params().empty()) {
            out << "(";
            for (std::size_t i = 0; i < inst.params().size(); ++i) {
                out << (i ? ", " : "") << paramText(inst.params()[i]);
            }
            out << ")";
        }
        for (std::size_t i = 0; i < inst.bits().size(); ++i) {
            out << (i ? ", " : " ") << "q[" << inst.bits()[i] << "]";
        }
        out << ";\n";
    }
    out << "}\n";
    return out.str();
}

} // namespace qf::frontend
