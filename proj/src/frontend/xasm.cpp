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

#include <sstream>

#include "cursor.hpp"
#include "qf/frontend/dialects.hpp"

namespace qf::frontend {

using ir::Token;
using ir::TokenKind;

namespace {

constexpr long kMaxLoopIterations = 1'000'000;

class XasmParser {
  public:
    XasmParser(const KernelUnit &unit, KernelBuilder &builder)
        : in_(unit.body, builder, true), b_(builder) {}

    void run() {
        while (!in_.atEnd()) {
            statement();
        }
    }

  private:
    void statement() {
        if (in_.accept(";")) {
            return;
        }
        const Token &name = in_.expectIdentifier("a statement");
        if (name.text == "for") {
            forLoop(name);
        } else if (b_.isKernel(name.text)) {
            auto args = in_.callArguments();
            b_.inlineCall(name, args);
            in_.expect(";");
        } else if (b_.isGenerator(name.text)) {
            generator(name);
            in_.expect(";");
        } else {
            gate(name);
            in_.expect(";");
        }
    }

    void gate(const Token &name) {
        if (!ir::lookupOp(name.text)) {
            b_.error(ErrorCode::UnknownInstruction, name, "unknown instruction '" + name.text + "'");
        }
        in_.expect("(");
        std::vector<std::size_t> bits;
        std::vector<ir::InstrParam> params;
        while (!in_.peek().isPunct(")")) {
            if (params.empty() && in_.peek().isIdent(b_.header().buffer) &&
                in_.peekAhead(1).isPunct("[")) {
                in_.next();
                in_.expect("[");
                bits.push_back(static_cast<std::size_t>(in_.index()));
                in_.expect("]");
            } else {
                params.push_back(in_.param());
            }
            if (!in_.accept(",")) {
                break;
            }
        }
        in_.expect(")");
        b_.addInstruction(name, name.text, std::move(bits), std::move(params));
    }

    void generator(const Token &name) {
        in_.expect("(");
        const Token &buffer = in_.expectIdentifier("the buffer argument");
        if (buffer.text != b_.header().buffer) {
            b_.error(buffer, "first argument of '" + name.text + "' must be the buffer '" +
                                 b_.header().buffer + "'");
        }
        std::string variable;
        HetMap options;
        while (in_.accept(",")) {
            if (in_.peek().isPunct("{")) {
                options.merge(in_.hetMap());
            } else if (in_.peek().is(TokenKind::String)) {
                std::string key = in_.next().text;
                in_.expect(",");
                const Token &value = in_.next();
                if (!value.is(TokenKind::String)) {
                    b_.error(value, "expected a string value for option '" + key + "'");
                }
                options.insert(key, value.text);
            } else if (variable.empty()) {
                const Token &at = in_.peek();
                ir::Affine v = in_.affine();
                if (v.isConstant() || v.scale != 1.0 || v.offset != 0.0) {
                    b_.error(at, "'" + name.text + "' takes a plain variable");
                }
                variable = v.variable;
            } else {
                b_.error(in_.peek(), "unexpected argument" + detail::Cursor::found(in_.peek()));
            }
        }
        in_.expect(")");
        b_.addGenerator(name, variable, std::move(options));
    }

    void forLoop(const Token &keyword) {
        in_.expect("(");
        if (in_.peek().isIdent("int")) {
            in_.next();
        }
        const Token &counter = in_.expectIdentifier("a loop counter");
        in_.expect("=");
        long start = in_.index();
        in_.expect(";");
        expectCounter(counter);
        const Token &cmp = in_.next();
        long bound = in_.index();
        in_.expect(";");
        long step = 0;
        if (in_.accept("++")) {
            expectCounter(counter);
            step = 1;
        } else if (in_.accept("--")) {
            expectCounter(counter);
            step = -1;
        } else {
            expectCounter(counter);
            if (in_.accept("++")) {
                step = 1;
            } else if (in_.accept("--")) {
                step = -1;
            } else if (in_.accept("+=")) {
                step = in_.index();
            } else if (in_.accept("-=")) {
                step = -in_.index();
            } else {
                b_.error(in_.peek(), "unsupported loop increment" + detail::Cursor::found(in_.peek()));
            }
        }
        in_.expect(")");
        if (step == 0) {
            b_.error(keyword, "loop step must be non-zero");
        }
        auto holds = [&](long i) {
            if (cmp.isPunct("<")) return i < bound;
            if (cmp.isPunct("<=")) return i <= bound;
            if (cmp.isPunct(">")) return i > bound;
            if (cmp.isPunct(">=")) return i >= bound;
            if (cmp.isPunct("!=")) return i != bound;
            b_.error(cmp, "unsupported loop condition '" + cmp.text + "'");
        };
        in_.expect("{");
        std::size_t bodyStart = in_.position();
        long iterations = 0;
        for (long i = start; holds(i); i += step) {
            if (++iterations > kMaxLoopIterations) {
                b_.error(keyword, "loop exceeds " + std::to_string(kMaxLoopIterations) +
                                      " iterations");
            }
            in_.seek(bodyStart);
            b_.bindConstant(counter, i);
            block();
            b_.unbindConstant(counter.text);
        }
        in_.seek(bodyStart);
        skipBlock();
    }

    void block() {
        while (!in_.peek().isPunct("}")) {
            if (in_.atEnd()) {
                b_.error(in_.peek(), "unterminated loop body");
            }
            statement();
        }
        in_.next();
    }

    void skipBlock() {
        int depth = 1;
        while (depth > 0) {
            const Token &t = in_.next();
            if (t.is(TokenKind::End)) {
                b_.error(t, "unterminated loop body");
            }
            if (t.isPunct("{")) {
                ++depth;
            } else if (t.isPunct("}")) {
                --depth;
            }
        }
    }

    void expectCounter(const Token &counter) {
        const Token &t = in_.next();
        if (!t.isIdent(counter.text)) {
            b_.error(t, "expected loop counter '" + counter.text + "'" + detail::Cursor::found(t));
        }
    }

    detail::Cursor in_;
    KernelBuilder &b_;
};

std::string qubitList(const ir::Instruction &inst) {
    std::string out;
    for (auto q : inst.bits()) {
        out += (out.empty() ? "q[" : ", q[") + std::to_string(q) + "]";
    }
    return out;
}

} // namespace

ir::Composite XasmCompiler::compileKernel(const KernelUnit &unit,
                                          const KernelLookup &lookup) const {
    KernelBuilder builder(unit.header, lookup, ErrorCode::SyntaxError);
    XasmParser(unit, builder).run();
    return builder.finish();
}

std::string XasmCompiler::translate(const ir::Composite &composite) const {
    std::ostringstream out;
    out << "__qpu__ void " << composite.name() << "(qbit q";
    for (const auto &p : headerParameters(composite)) {
        out << ", double " << p;
    }
    out << ") {\n";
    for (const auto &inst : composite.instructions(true)) {
        out << "  " << inst.name() << "(" << qubitList(inst);
        for (const auto &p : inst.params()) {
            out << ", " << paramText(p);
        }
        out << ");\n";
    }
    out << "}\n";
    return out.str();
}

} // namespace qf::frontend
