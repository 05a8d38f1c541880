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
#include <set>

#include "qf/foundation/framework.hpp"
#include "qf/frontend/compiler.hpp"
#include "qf/stdlib/gates.hpp"

namespace qf::frontend {

using ir::Affine;
using ir::Token;
using ir::TokenKind;

namespace {

[[noreturn]] void syntaxError(const Token &at, const std::string &message) {
    throw SourceError(ErrorCode::SyntaxError, at.line, at.column, message);
}

class HeaderParser {
  public:
    explicit HeaderParser(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

    std::vector<KernelUnit> run() {
        std::vector<KernelUnit> units;
        std::set<std::string, std::less<>> names;
        while (true) {
            skipNewlines();
            if (peek().is(TokenKind::End)) {
                break;
            }
            KernelUnit unit = kernel();
            if (!names.insert(unit.header.name).second) {
                throw SourceError(ErrorCode::SyntaxError, unit.header.line, unit.header.column,
                                  "kernel '" + unit.header.name + "' defined twice");
            }
            units.push_back(std::move(unit));
        }
        return units;
    }

  private:
    const Token &peek() const { return tokens_[pos_]; }
    const Token &next() {
        const Token &t = tokens_[pos_];
        if (!t.is(TokenKind::End)) {
            ++pos_;
        }
        return t;
    }
    void skipNewlines() {
        while (peek().is(TokenKind::Newline)) {
            ++pos_;
        }
    }
    const Token &expect(std::string_view punct) {
        skipNewlines();
        if (!peek().isPunct(punct)) {
            syntaxError(peek(), "expected '" + std::string(punct) + "'");
        }
        return next();
    }

    KernelUnit kernel() {
        const Token &marker = next();
        if (!marker.isIdent("__qpu__")) {
            syntaxError(marker, "expected a __qpu__ kernel, found '" + marker.text + "'");
        }
        skipNewlines();
        if (peek().isIdent("void")) {
            next();
            skipNewlines();
        }
        const Token &name = next();
        if (!name.is(TokenKind::Identifier)) {
            syntaxError(name, "expected kernel name");
        }
        KernelUnit unit;
        unit.header.name = name.text;
        unit.header.line = name.line;
        unit.header.column = name.column;
        expect("(");
        std::vector<std::string> declared;
        skipNewlines();
        if (!peek().isPunct(")")) {
            while (true) {
                declared.push_back(parameter());
                skipNewlines();
                if (peek().isPunct(")")) {
                    break;
                }
                expect(",");
            }
        }
        next();
        if (!declared.empty()) {
            unit.header.buffer = declared.front();
            unit.header.parameters.assign(declared.begin() + 1, declared.end());
        }
        std::set<std::string, std::less<>> seen;
        for (const auto &p : declared) {
            if (!seen.insert(p).second) {
                syntaxError(name, "parameter '" + p + "' declared twice");
            }
        }
        expect("{");
        int depth = 1;
        while (true) {
            const Token &t = next();
            if (t.is(TokenKind::End)) {
                syntaxError(t, "unterminated body of kernel '" + unit.header.name + "'");
            }
            if (t.isPunct("{")) {
                ++depth;
            } else if (t.isPunct("}") && --depth == 0) {
                unit.body.push_back(Token{TokenKind::End, "", t.line, t.column});
                break;
            }
            unit.body.push_back(t);
        }
        return unit;
    }

    /// `Type [qualifiers] name`; the name is the last identifier before ',' or ')'.
    std::string parameter() {
        std::string last;
        std::size_t count = 0;
        int angle = 0;
        while (true) {
            skipNewlines();
            const Token &t = peek();
            if (t.is(TokenKind::End) || (angle == 0 && (t.isPunct(",") || t.isPunct(")")))) {
                break;
            }
            if (t.isPunct("<")) {
                ++angle;
            } else if (t.isPunct(">")) {
                --angle;
            } else if (t.is(TokenKind::Identifier) && angle == 0) {
                last = t.text;
            } else if (!t.is(TokenKind::Punct) && !t.is(TokenKind::Identifier)) {
                syntaxError(t, "unexpected '" + t.text + "' in kernel parameter list");
            }
            next();
            ++count;
        }
        if (count < 2 || last.empty()) {
            syntaxError(peek(), "kernel parameters need a type and a name");
        }
        return last;
    }

    std::vector<Token> tokens_;
    std::size_t pos_ = 0;
};

ir::InstrParam substituteParam(const ir::InstrParam &param,
                               const std::map<std::string, Affine, std::less<>> &mapping) {
    const auto *expr = std::get_if<ir::ParamExpr>(&param);
    if (expr == nullptr) {
        return param;
    }
    auto found = mapping.find(expr->variable);
    if (found == mapping.end()) {
        return param;
    }
    const Affine &arg = found->second;
    Affine composed{expr->scale * arg.scale, expr->scale * arg.offset + expr->offset,
                    arg.variable};
    if (arg.isConstant()) {
        return composed.offset;
    }
    if (arg == Affine::of(expr->variable)) {
        return param;
    }
    return ir::ParamExpr::fromAffine(composed);
}

} // namespace

std::vector<KernelUnit> splitKernels(std::string_view source) {
    return HeaderParser(ir::tokenize(source)).run();
}

ir::Composite substituteVariables(const ir::Composite &source,
                                  const std::map<std::string, Affine, std::less<>> &mapping) {
    ir::Composite out(source.name());
    out.metadata() = source.metadata();
    for (const auto &child : source.children()) {
        if (child.isInstruction()) {
            ir::Instruction inst = child.instruction();
            for (std::size_t i = 0; i < inst.params().size(); ++i) {
                inst.setParam(i, substituteParam(inst.params()[i], mapping));
            }
            out.addInstruction(std::move(inst));
        } else {
            out.addComposite(substituteVariables(child.composite(), mapping));
        }
    }
    out.setVariables(out.symbols());
    return out;
}

KernelBuilder::KernelBuilder(const KernelHeader &header, KernelLookup lookup, ErrorCode errorCode)
    : header_(header), lookup_(std::move(lookup)), errorCode_(errorCode), target_(header.name) {
    for (const auto &p : header_.parameters) {
        usage_[p];
    }
}

void KernelBuilder::error(const Token &at, const std::string &message) const {
    throw SourceError(errorCode_, at.line, at.column, message);
}

void KernelBuilder::error(ErrorCode code, const Token &at, const std::string &message) const {
    throw SourceError(code, at.line, at.column, message);
}

void KernelBuilder::bindConstant(const Token &name, long value) {
    if (usage_.contains(name.text) || constants_.contains(name.text) ||
        name.text == header_.buffer) {
        error(name, "loop counter '" + name.text + "' shadows an existing name");
    }
    constants_[name.text] = value;
}

void KernelBuilder::unbindConstant(const std::string &name) { constants_.erase(name); }

ir::NameResolver KernelBuilder::resolver() {
    return [this](const Token &name, std::optional<long> index) -> Affine {
        if (auto c = constants_.find(name.text); c != constants_.end()) {
            if (index) {
                error(name, "loop counter '" + name.text + "' cannot be subscripted");
            }
            return Affine::constant(static_cast<double>(c->second));
        }
        auto used = usage_.find(name.text);
        if (used == usage_.end()) {
            error(ErrorCode::UndeclaredVariable, name, "undeclared variable '" + name.text + "'");
        }
        if (index) {
            used->second.maxIndex = std::max(used->second.maxIndex, *index);
            return Affine::of(name.text + "[" + std::to_string(*index) + "]");
        }
        used->second.plain = true;
        return Affine::of(name.text);
    };
}

ir::InstrParam KernelBuilder::parseParam(std::span<const Token> tokens, std::size_t &pos) {
    ir::ExprParser parser(tokens, pos, resolver(), errorCode_);
    Affine value = parser.parse();
    if (value.isConstant()) {
        return value.offset;
    }
    return ir::ParamExpr::fromAffine(value, parser.onlyFreeNames() ? parser.consumedText() : "");
}

long KernelBuilder::parseIndex(std::span<const Token> tokens, std::size_t &pos) {
    ir::ExprParser parser(tokens, pos, resolver(), errorCode_);
    return parser.parseIndex();
}

void KernelBuilder::addInstruction(const Token &at, std::string_view name,
                                   std::vector<std::size_t> bits,
                                   std::vector<ir::InstrParam> params,
                                   std::vector<std::size_t> cbits) {
    try {
        auto inst = ir::createInstruction(name, std::move(bits), std::move(params));
        if (!cbits.empty()) {
            inst = ir::Instruction(inst.kind(), inst.bits(), inst.params(), std::move(cbits));
        }
        target_.addInstruction(std::move(inst));
    } catch (const SourceError &) {
        throw;
    } catch (const Error &e) {
        error(e.code(), at, e.detail());
    }
}

bool KernelBuilder::isKernel(std::string_view name) const {
    return lookup_ && lookup_(name) != nullptr;
}

bool KernelBuilder::isGenerator(std::string_view name) const {
    return isInitialized() && serviceRegistry().contains(ir::CircuitGenerator::kServiceKind, name);
}

void KernelBuilder::inlineCall(const Token &at, const std::vector<Affine> &args) {
    const ir::Composite *callee = lookup_ ? lookup_(at.text) : nullptr;
    if (callee == nullptr) {
        error(ErrorCode::UnknownInstruction, at, "unknown kernel '" + at.text + "'");
    }
    const auto &vars = callee->variables();
    if (vars.size() != args.size()) {
        error(ErrorCode::ArityMismatch, at,
              "kernel '" + at.text + "' takes " + std::to_string(vars.size()) +
                  " arguments, got " + std::to_string(args.size()));
    }
    std::map<std::string, Affine, std::less<>> mapping;
    for (std::size_t i = 0; i < vars.size(); ++i) {
        mapping[vars[i]] = args[i];
    }
    target_.addComposite(substituteVariables(*callee, mapping));
}

void KernelBuilder::addGenerator(const Token &at, const std::string &variable, HetMap options) {
    if (!isGenerator(at.text)) {
        error(ErrorCode::UnknownInstruction, at, "unknown circuit generator '" + at.text + "'");
    }
    ir::Composite child(at.text, variable.empty() ? std::vector<std::string>{}
                                                  : std::vector<std::string>{variable});
    try {
        child.setGenerator(serviceRegistry().get<ir::CircuitGenerator>(at.text),
                           std::move(options));
        if (!child.expand()) {
            error(at, at.text + ": " + child.diagnostic());
        }
    } catch (const SourceError &) {
        throw;
    } catch (const Error &e) {
        error(e.code(), at, at.text + ": " + e.detail());
    }
    target_.addComposite(std::move(child));
}

ir::Composite KernelBuilder::finish() {
    std::vector<std::string> variables;
    Token at{TokenKind::Identifier, header_.name, header_.line, header_.column};
    for (const auto &p : header_.parameters) {
        const Usage &u = usage_.at(p);
        if (u.plain && u.maxIndex >= 0) {
            error(at, "parameter '" + p + "' is used both with and without a subscript");
        }
        if (u.maxIndex >= 0) {
            for (long i = 0; i <= u.maxIndex; ++i) {
                variables.push_back(p + "[" + std::to_string(i) + "]");
            }
        } else {
            variables.push_back(p);
        }
    }
    target_.setVariables(std::move(variables));
    return std::move(target_);
}

HetMap parseHetMapLiteral(std::span<const Token> tokens, std::size_t &pos, ErrorCode errorCode) {
    auto skip = [&] {
        while (tokens[pos].is(TokenKind::Newline)) {
            ++pos;
        }
    };
    auto bad = [&](const std::string &message) {
        return SourceError(errorCode, tokens[pos].line, tokens[pos].column, message);
    };
    auto expect = [&](std::string_view p) {
        skip();
        if (!tokens[pos].isPunct(p)) {
            throw bad("expected '" + std::string(p) + "' in option map");
        }
        ++pos;
    };
    auto number = [&]() -> HetValue {
        skip();
        double sign = 1.0;
        if (tokens[pos].isPunct("-") || tokens[pos].isPunct("+")) {
            sign = tokens[pos].text == "-" ? -1.0 : 1.0;
            ++pos;
        }
        const Token &t = tokens[pos];
        if (t.is(TokenKind::Integer)) {
            ++pos;
            return static_cast<std::int64_t>(sign) * std::stoll(t.text);
        }
        if (t.is(TokenKind::Real)) {
            ++pos;
            return sign * std::stod(t.text);
        }
        throw bad("expected an option value");
    };

    HetMap out;
    expect("{");
    skip();
    while (!tokens[pos].isPunct("}")) {
        expect("{");
        skip();
        if (!tokens[pos].is(TokenKind::String)) {
            throw bad("option keys must be strings");
        }
        std::string key = tokens[pos++].text;
        expect(",");
        skip();
        const Token &v = tokens[pos];
        if (v.is(TokenKind::String)) {
            ++pos;
            out.insert(key, v.text);
        } else if (v.isIdent("true") || v.isIdent("false")) {
            ++pos;
            out.insert(key, v.text == "true");
        } else if (v.isPunct("{")) {
            ++pos;
            std::vector<double> list;
            skip();
            while (!tokens[pos].isPunct("}")) {
                list.push_back(number().as<double>());
                skip();
                if (tokens[pos].isPunct(",")) {
                    ++pos;
                }
                skip();
            }
            ++pos;
            out.insert(key, std::move(list));
        } else {
            out.insert(key, number());
        }
        expect("}");
        skip();
        if (tokens[pos].isPunct(",")) {
            ++pos;
            skip();
        }
    }
    ++pos;
    return out;
}

ir::IRContainer Compiler::compile(std::string_view source) const {
    auto units = splitKernels(source);
    if (units.empty()) {
        throw SourceError(ErrorCode::SyntaxError, 1, 1, "no kernels found");
    }
    ir::IRContainer ir;
    KernelLookup lookup = [&ir](std::string_view name) -> const ir::Composite * {
        return ir.hasComposite(name) ? ir.getComposite(name).get() : nullptr;
    };
    for (const auto &unit : units) {
        ir.addComposite(compileKernel(unit, lookup));
    }
    return ir;
}

ir::IRContainer Compiler::compile(std::string_view source,
                                  const std::shared_ptr<Accelerator> & /*target*/) const {
    return compile(source);
}

std::vector<std::string> headerParameters(const ir::Composite &composite) {
    std::vector<std::string> out;
    for (const auto &v : composite.variables()) {
        std::string base = v.substr(0, v.find('['));
        if (std::find(out.begin(), out.end(), base) == out.end()) {
            out.push_back(base);
        }
    }
    return out;
}

std::vector<ir::Instruction> lowerForDialect(const ir::Composite &composite,
                                             std::span<const ir::OpKind> allowed,
                                             std::string_view dialect) {
    std::vector<ir::Instruction> out;
    for (const auto &inst : composite.instructions(true)) {
        auto lowered = inst.isAnnealing() ? std::vector<ir::Instruction>{}
                                          : stdlib::lowerInstruction(inst, allowed);
        if (lowered.empty()) {
            fail(ErrorCode::UntranslatableInstruction,
                 std::string(inst.name()) + " has no " + std::string(dialect) + " equivalent");
        }
        out.insert(out.end(), lowered.begin(), lowered.end());
    }
    return out;
}

std::string paramText(const ir::InstrParam &param) {
    if (const auto *expr = std::get_if<ir::ParamExpr>(&param)) {
        return expr->text.empty() ? ir::canonicalText(expr->affine()) : expr->text;
    }
    if (const auto *text = std::get_if<ir::TextParam>(&param)) {
        return "\"" + text->value + "\"";
    }
    if (const auto *i = std::get_if<std::int64_t>(&param)) {
        return std::to_string(*i);
    }
    return ir::formatReal(std::get<double>(param));
}

} // namespace qf::frontend
