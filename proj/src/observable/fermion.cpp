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

#include "qf/observable/fermion.hpp"

#include "qf/ir/lexer.hpp"

namespace qf::obs {

namespace {

using ir::Token;
using ir::TokenKind;

class FermionParser {
  public:
    explicit FermionParser(std::string_view text)
        : tokens_(ir::tokenize(text, 1, ErrorCode::ParseError)) {
        std::erase_if(tokens_, [](const Token &t) { return t.is(TokenKind::Newline); });
    }

    FermionOperator run() {
        FermionOperator result;
        bool first = true;
        while (!peek().is(TokenKind::End)) {
            double sign = 1.0;
            if (peek().isPunct("+") || peek().isPunct("-")) {
                sign = next().text == "-" ? -1.0 : 1.0;
            } else if (!first) {
                error(peek(), "expected '+' or '-' between terms");
            }
            result += term() * Complex(sign);
            first = false;
        }
        return result;
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
    [[noreturn]] void error(const Token &at, const std::string &message) const {
        throw SourceError(ErrorCode::ParseError, at.line, at.column, message);
    }

    double signedNumber() {
        double sign = 1.0;
        if (peek().isPunct("-") || peek().isPunct("+")) {
            sign = next().text == "-" ? -1.0 : 1.0;
        }
        const Token &t = next();
        if (!t.is(TokenKind::Integer) && !t.is(TokenKind::Real)) {
            error(t, "expected a number");
        }
        return sign * std::stod(t.text);
    }

    FermionOperator term() {
        const Token &start = peek();
        Complex coefficient = 1.0;
        bool hasContent = false;
        if (peek().is(TokenKind::Real)) {
            coefficient = std::stod(next().text);
            hasContent = true;
        } else if (peek().isPunct("(")) {
            next();
            double re = signedNumber();
            if (!next().isPunct(",")) {
                error(tokens_[pos_ - 1], "expected ',' in complex coefficient");
            }
            double im = signedNumber();
            if (!next().isPunct(")")) {
                error(tokens_[pos_ - 1], "expected ')' after complex coefficient");
            }
            coefficient = Complex(re, im);
            hasContent = true;
        }
        std::vector<std::pair<std::size_t, bool>> ops;
        std::string variable;
        while (true) {
            if (peek().is(TokenKind::Integer)) {
                std::size_t site = std::stoul(next().text);
                bool creation = false;
                if (peek().isPunct("^")) {
                    next();
                    creation = true;
                }
                ops.emplace_back(site, creation);
            } else if (peek().is(TokenKind::Identifier) && variable.empty()) {
                variable = next().text;
            } else {
                break;
            }
            hasContent = true;
        }
        if (!hasContent) {
            error(start, start.is(TokenKind::End) ? "expected a term"
                                                  : "unexpected '" + start.text + "'");
        }
        if (!peek().is(TokenKind::End) && !peek().isPunct("+") && !peek().isPunct("-")) {
            error(peek(), "unexpected '" + peek().text + "' in ladder term");
        }
        return FermionOperator(std::move(ops), coefficient, std::move(variable));
    }

    std::vector<Token> tokens_;
    std::size_t pos_ = 0;
};

} // namespace

std::string LadderTerm::key() const {
    std::string out;
    for (const auto &[site, creation] : ops) {
        if (!out.empty()) {
            out += ' ';
        }
        out += std::to_string(site);
        if (creation) {
            out += '^';
        }
    }
    if (out.empty()) {
        out = "I";
    }
    if (!variable.empty()) {
        out += " " + variable;
    }
    return out;
}

FermionOperator::FermionOperator(std::vector<std::pair<std::size_t, bool>> ops,
                                 Complex coefficient, std::string variable) {
    addTerm(LadderTerm{std::move(ops), std::move(variable)}, coefficient);
}

FermionOperator FermionOperator::parse(std::string_view text) { return FermionParser(text).run(); }

void FermionOperator::addTerm(const LadderTerm &term, Complex coefficient) {
    auto &slot = terms_[term];
    slot += coefficient;
    if (std::abs(slot) < 1e-12) {
        terms_.erase(term);
    }
}

FermionOperator &FermionOperator::operator+=(const FermionOperator &other) {
    for (const auto &[term, c] : other.terms_) {
        addTerm(term, c);
    }
    return *this;
}

FermionOperator &FermionOperator::operator*=(const FermionOperator &other) {
    FermionOperator product;
    for (const auto &[ta, ca] : terms_) {
        for (const auto &[tb, cb] : other.terms_) {
            LadderTerm t = ta;
            t.ops.insert(t.ops.end(), tb.ops.begin(), tb.ops.end());
            if (!tb.variable.empty()) {
                t.variable = t.variable.empty() ? tb.variable : t.variable + "*" + tb.variable;
            }
            product.addTerm(t, ca * cb);
        }
    }
    *this = std::move(product);
    return *this;
}

FermionOperator &FermionOperator::operator*=(Complex factor) {
    for (auto &[term, c] : terms_) {
        c *= factor;
    }
    std::erase_if(terms_, [](const auto &e) { return std::abs(e.second) < 1e-12; });
    return *this;
}

std::string FermionOperator::toString() const {
    if (terms_.empty()) {
        return "0";
    }
    std::string out;
    for (const auto &[term, c] : terms_) {
        if (!out.empty()) {
            out += " + ";
        }
        out += "(" + ir::formatReal(c.real()) + ", " + ir::formatReal(c.imag()) + ")";
        if (!term.ops.empty() || !term.variable.empty()) {
            out += " " + term.key();
        }
    }
    return out;
}

PauliOperator FermionOperator::toPauli() const { return jordanWigner(*this); }

PauliOperator jordanWigner(const FermionOperator &op) {
    constexpr Complex i{0.0, 1.0};
    PauliOperator result;
    for (const auto &[term, coefficient] : op.terms()) {
        PauliOperator product(coefficient);
        for (const auto &[site, creation] : term.ops) {
            PauliOperator ladder = PauliOperator(PauliOps{{site, 'X'}}, 0.5) +
                                   PauliOperator(PauliOps{{site, 'Y'}}, creation ? -0.5 * i : 0.5 * i);
            for (std::size_t k = 0; k < site; ++k) {
                ladder *= PauliOperator(PauliOps{{k, 'Z'}});
            }
            product *= ladder;
        }
        if (!term.variable.empty()) {
            PauliOperator tagged;
            for (const auto &[t, c] : product.terms()) {
                tagged += PauliOperator(t.ops, c, term.variable);
            }
            product = std::move(tagged);
        }
        result += product;
    }
    return result;
}

ObservablePtr JordanWignerTransform::transform(const Observable &input) const {
    return std::make_shared<PauliOperator>(input.toPauli());
}

} // namespace qf::obs
