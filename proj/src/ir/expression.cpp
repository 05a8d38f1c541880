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

#include "qf/ir/expression.hpp"

#include <charconv>
#include <cmath>
#include <numbers>

namespace qf::ir {

std::string formatReal(double value) {
    char buf[64];
    auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), value);
    std::string out(buf, end);
    return out;
}

std::string canonicalText(const Affine &expr) {
    if (expr.isConstant()) {
        return formatReal(expr.offset);
    }
    std::string out;
    if (expr.scale == 1.0) {
        out = expr.variable;
    } else if (expr.scale == -1.0) {
        out = "-" + expr.variable;
    } else {
        out = formatReal(expr.scale) + "*" + expr.variable;
    }
    if (expr.offset > 0.0) {
        out += " + " + formatReal(expr.offset);
    } else if (expr.offset < 0.0) {
        out += " - " + formatReal(-expr.offset);
    }
    return out;
}

ExprParser::ExprParser(std::span<const Token> tokens, std::size_t &pos, NameResolver resolver,
                       ErrorCode errorCode)
    : tokens_(tokens), pos_(pos), resolver_(std::move(resolver)), errorCode_(errorCode) {}

const Token &ExprParser::peek() const {
    // Newlines never belong to an expression.
    return tokens_[std::min(pos_, tokens_.size() - 1)];
}

const Token &ExprParser::next() {
    const Token &tok = peek();
    if (!tok.is(TokenKind::End)) {
        ++pos_;
    }
    consumed_ += tok.text;
    return tok;
}

void ExprParser::error(const Token &at, const std::string &message) const {
    throw SourceError(errorCode_, at.line, at.column, message);
}

Affine ExprParser::parse() {
    consumed_.clear();
    onlyFreeNames_ = true;
    return expression();
}

long ExprParser::parseIndex() {
    const Token &start = peek();
    Affine value = expression();
    if (!value.isConstant()) {
        error(start, "index expression depends on variable '" + value.variable + "'");
    }
    double rounded = std::round(value.offset);
    if (std::abs(rounded - value.offset) > 1e-9 || rounded < 0) {
        error(start, "index must be a non-negative integer, got " + formatReal(value.offset));
    }
    return static_cast<long>(rounded);
}

Affine ExprParser::expression() {
    Affine lhs = term();
    while (peek().isPunct("+") || peek().isPunct("-")) {
        const Token &op = next();
        Affine rhs = term();
        double sign = op.text == "+" ? 1.0 : -1.0;
        if (!lhs.isConstant() && !rhs.isConstant() && lhs.variable != rhs.variable) {
            error(op, "expression combines two variables '" + lhs.variable + "' and '" +
                          rhs.variable + "'");
        }
        Affine out;
        out.offset = lhs.offset + sign * rhs.offset;
        if (lhs.isConstant() && rhs.isConstant()) {
            out.scale = 0.0;
        } else {
            out.variable = lhs.isConstant() ? rhs.variable : lhs.variable;
            out.scale = (lhs.isConstant() ? 0.0 : lhs.scale) +
                        sign * (rhs.isConstant() ? 0.0 : rhs.scale);
            if (out.scale == 0.0) {
                out.variable.clear();
            }
        }
        lhs = out;
    }
    return lhs;
}

Affine ExprParser::term() {
    Affine lhs = unary();
    while (peek().isPunct("*") || peek().isPunct("/")) {
        const Token &op = next();
        Affine rhs = unary();
        if (op.text == "*") {
            if (!lhs.isConstant() && !rhs.isConstant()) {
                error(op, "product of two variables is not supported");
            }
            const Affine &var = lhs.isConstant() ? rhs : lhs;
            double factor = lhs.isConstant() ? lhs.offset : rhs.offset;
            Affine out{var.scale * factor, var.offset * factor, var.variable};
            if (out.scale == 0.0) {
                out.variable.clear();
            }
            lhs = out;
        } else {
            if (!rhs.isConstant()) {
                error(op, "division by a variable is not supported");
            }
            if (rhs.offset == 0.0) {
                error(op, "division by zero");
            }
            lhs = Affine{lhs.scale / rhs.offset, lhs.offset / rhs.offset, lhs.variable};
        }
    }
    return lhs;
}

Affine ExprParser::unary() {
    if (peek().isPunct("-")) {
        next();
        Affine inner = unary();
        return Affine{-inner.scale, -inner.offset, inner.variable};
    }
    if (peek().isPunct("+")) {
        next();
        return unary();
    }
    return primary();
}

Affine ExprParser::primary() {
    const Token &tok = peek();
    switch (tok.kind) {
    case TokenKind::Integer:
    case TokenKind::Real: {
        next();
        return Affine::constant(std::stod(tok.text));
    }
    case TokenKind::Identifier: {
        next();
        if (tok.text == "pi") {
            return Affine::constant(std::numbers::pi);
        }
        std::optional<long> index;
        if (peek().isPunct("[")) {
            next();
            index = parseIndex();
            if (!peek().isPunct("]")) {
                error(peek(), "expected ']'");
            }
            next();
        }
        Affine value = resolver_(tok, index);
        if (value.isConstant()) {
            onlyFreeNames_ = false;
        }
        return value;
    }
    default:
        break;
    }
    if (tok.isPunct("(")) {
        next();
        Affine inner = expression();
        if (!peek().isPunct(")")) {
            error(peek(), "expected ')'");
        }
        next();
        return inner;
    }
    error(tok, tok.is(TokenKind::End) || tok.is(TokenKind::Newline)
                   ? "expected expression"
                   : "unexpected '" + tok.text + "' in expression");
}

ParamExpr ParamExpr::symbol(std::string name) {
    ParamExpr out;
    out.variable = name;
    out.text = std::move(name);
    return out;
}

ParamExpr ParamExpr::fromAffine(const Affine &affine, std::string text) {
    ParamExpr out;
    out.variable = affine.variable;
    out.scale = affine.scale;
    out.offset = affine.offset;
    out.text = text.empty() ? canonicalText(affine) : std::move(text);
    return out;
}

ParamExpr ParamExpr::parse(std::string_view text, ErrorCode errorCode) {
    auto tokens = tokenize(text, 1, errorCode);
    std::erase_if(tokens, [](const Token &t) { return t.is(TokenKind::Newline); });
    std::size_t pos = 0;
    ExprParser parser(
        tokens, pos,
        [](const Token &name, std::optional<long> index) {
            return Affine::of(index ? name.text + "[" + std::to_string(*index) + "]" : name.text);
        },
        errorCode);
    Affine value = parser.parse();
    if (!tokens[pos].is(TokenKind::End)) {
        throw SourceError(errorCode, tokens[pos].line, tokens[pos].column,
                          "trailing input '" + tokens[pos].text + "' in expression");
    }
    if (value.isConstant()) {
        throw SourceError(errorCode, 1, 1, "symbolic parameter '" + std::string(text) +
                                               "' has no free variable");
    }
    return fromAffine(value, std::string(text));
}

} // namespace qf::ir
