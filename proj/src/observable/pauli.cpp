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

#include "qf/observable/pauli.hpp"

#include <algorithm>
#include <cctype>

#include "qf/ir/lexer.hpp"

namespace qf::obs {

namespace {

constexpr double kPruneTolerance = 1e-12;

using ir::Token;
using ir::TokenKind;

std::string formatCoefficient(Complex c) {
    if (c.imag() == 0.0) {
        return ir::formatReal(c.real());
    }
    return "(" + ir::formatReal(c.real()) + ", " + ir::formatReal(c.imag()) + ")";
}

/// Splits "X0Y12" into factors; false when the identifier is not a Pauli product.
bool splitFactors(const std::string &ident, std::vector<std::pair<std::size_t, char>> &out) {
    if (ident == "I") {
        return true;
    }
    std::vector<std::pair<std::size_t, char>> factors;
    std::size_t i = 0;
    while (i < ident.size()) {
        char p = ident[i];
        if (p != 'X' && p != 'Y' && p != 'Z' && p != 'I') {
            return false;
        }
        std::size_t j = i + 1;
        while (j < ident.size() && std::isdigit(static_cast<unsigned char>(ident[j]))) {
            ++j;
        }
        if (j == i + 1) {
            return false;
        }
        if (p != 'I') {
            factors.emplace_back(std::stoul(ident.substr(i + 1, j - i - 1)), p);
        }
        i = j;
    }
    out.insert(out.end(), factors.begin(), factors.end());
    return true;
}

class PauliParser {
  public:
    explicit PauliParser(std::string_view text) : tokens_(ir::tokenize(text, 1, ErrorCode::ParseError)) {
        std::erase_if(tokens_, [](const Token &t) { return t.is(TokenKind::Newline); });
    }

    PauliOperator run() {
        PauliOperator result;
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

    double number() {
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

    PauliOperator term() {
        const Token &start = peek();
        Complex coefficient = 1.0;
        bool hasCoefficient = false;
        if (peek().is(TokenKind::Integer) || peek().is(TokenKind::Real)) {
            coefficient = std::stod(next().text);
            hasCoefficient = true;
        } else if (peek().isPunct("(")) {
            next();
            double re = number();
            if (!next().isPunct(",")) {
                error(tokens_[pos_ - 1], "expected ',' in complex coefficient");
            }
            double im = number();
            if (!next().isPunct(")")) {
                error(tokens_[pos_ - 1], "expected ')' after complex coefficient");
            }
            coefficient = Complex(re, im);
            hasCoefficient = true;
        }
        if (hasCoefficient && peek().isPunct("*")) {
            next();
        }

        PauliOperator product(coefficient);
        std::string variable;
        bool hasFactor = false;
        while (peek().is(TokenKind::Identifier)) {
            const Token &ident = next();
            std::vector<std::pair<std::size_t, char>> factors;
            if (splitFactors(ident.text, factors)) {
                for (const auto &f : factors) {
                    product *= PauliOperator({f});
                }
            } else if (variable.empty()) {
                variable = ident.text;
            } else {
                error(ident, "term has more than one variable ('" + variable + "', '" +
                                 ident.text + "')");
            }
            hasFactor = true;
            if (peek().isPunct("*")) {
                next();
                if (!peek().is(TokenKind::Identifier)) {
                    error(peek(), "expected a Pauli factor after '*'");
                }
            }
        }
        if (!hasCoefficient && !hasFactor) {
            error(start, start.is(TokenKind::End) ? "expected a term"
                                                  : "unexpected '" + start.text + "'");
        }
        if (variable.empty()) {
            return product;
        }
        PauliOperator tagged;
        for (const auto &[t, c] : product.terms()) {
            tagged += PauliOperator(t.ops, c, variable);
        }
        return tagged;
    }

    std::vector<Token> tokens_;
    std::size_t pos_ = 0;
};

} // namespace

std::vector<std::size_t> PauliTerm::sites() const {
    std::vector<std::size_t> out;
    out.reserve(ops.size());
    for (const auto &op : ops) {
        out.push_back(op.first);
    }
    return out;
}

std::string PauliTerm::key() const {
    std::string out;
    for (const auto &[site, p] : ops) {
        out += p;
        out += std::to_string(site);
    }
    if (out.empty()) {
        out = "I";
    }
    if (!variable.empty()) {
        out += "*" + variable;
    }
    return out;
}

std::pair<Complex, char> multiplyPaulis(char a, char b) {
    constexpr Complex i{0.0, 1.0};
    if (a == b) {
        return {1.0, '\0'};
    }
    // XY = iZ, YZ = iX, ZX = iY; reversed order flips the sign.
    auto cyclic = [](char x, char y) {
        return (x == 'X' && y == 'Y') || (x == 'Y' && y == 'Z') || (x == 'Z' && y == 'X');
    };
    char third = static_cast<char>('X' + 'Y' + 'Z' - a - b);
    return {cyclic(a, b) ? i : -i, third};
}

PauliOperator::PauliOperator(Complex constant) { addTerm(PauliTerm{}, constant); }

PauliOperator::PauliOperator(std::vector<std::pair<std::size_t, char>> ops, Complex coefficient,
                             std::string variable) {
    // Multiply factors in the given order so repeated sites obey the Pauli algebra.
    std::map<std::size_t, char> merged;
    Complex phase = 1.0;
    for (const auto &[site, p] : ops) {
        if (p != 'X' && p != 'Y' && p != 'Z') {
            fail(ErrorCode::ParseError, std::string("invalid Pauli '") + p + "'");
        }
        auto it = merged.find(site);
        if (it == merged.end()) {
            merged.emplace(site, p);
            continue;
        }
        auto [factor, result] = multiplyPaulis(it->second, p);
        phase *= factor;
        if (result == '\0') {
            merged.erase(it);
        } else {
            it->second = result;
        }
    }
    PauliTerm term;
    term.ops.assign(merged.begin(), merged.end());
    term.variable = std::move(variable);
    addTerm(term, coefficient * phase);
}

PauliOperator PauliOperator::parse(std::string_view text) { return PauliParser(text).run(); }

void PauliOperator::addTerm(const PauliTerm &term, Complex coefficient) {
    auto &slot = terms_[term];
    slot += coefficient;
    if (std::abs(slot) < kPruneTolerance) {
        terms_.erase(term);
    }
}

void PauliOperator::prune() {
    std::erase_if(terms_, [](const auto &entry) { return std::abs(entry.second) < kPruneTolerance; });
}

Complex PauliOperator::identityCoefficient() const {
    auto it = terms_.find(PauliTerm{});
    return it == terms_.end() ? Complex{} : it->second;
}

std::size_t PauliOperator::nQubits() const {
    std::size_t n = 0;
    for (const auto &[term, c] : terms_) {
        if (!term.ops.empty()) {
            n = std::max(n, term.ops.back().first + 1);
        }
    }
    return n;
}

PauliOperator &PauliOperator::operator+=(const PauliOperator &other) {
    for (const auto &[term, c] : other.terms_) {
        addTerm(term, c);
    }
    return *this;
}

PauliOperator &PauliOperator::operator-=(const PauliOperator &other) {
    for (const auto &[term, c] : other.terms_) {
        addTerm(term, -c);
    }
    return *this;
}

PauliOperator &PauliOperator::operator*=(const PauliOperator &other) {
    PauliOperator product;
    for (const auto &[ta, ca] : terms_) {
        for (const auto &[tb, cb] : other.terms_) {
            auto ops = ta.ops;
            ops.insert(ops.end(), tb.ops.begin(), tb.ops.end());
            std::string variable = ta.variable;
            if (!tb.variable.empty()) {
                variable = variable.empty() ? tb.variable : variable + "*" + tb.variable;
            }
            product += PauliOperator(std::move(ops), ca * cb, std::move(variable));
        }
    }
    *this = std::move(product);
    return *this;
}

PauliOperator &PauliOperator::operator*=(Complex factor) {
    for (auto &[term, c] : terms_) {
        c *= factor;
    }
    prune();
    return *this;
}

bool PauliOperator::approxEqual(const PauliOperator &other, double tol) const {
    auto covered = [tol](const Terms &a, const Terms &b) {
        for (const auto &[term, c] : a) {
            auto it = b.find(term);
            Complex d = it == b.end() ? Complex{} : it->second;
            if (std::abs(c - d) > tol) {
                return false;
            }
        }
        return true;
    };
    return covered(terms_, other.terms_) && covered(other.terms_, terms_);
}

std::string PauliOperator::toString() const {
    if (terms_.empty()) {
        return "0";
    }
    std::string out;
    for (const auto &[term, c] : terms_) {
        Complex coefficient = c;
        if (!out.empty()) {
            if (coefficient.imag() == 0.0 && coefficient.real() < 0.0) {
                out += " - ";
                coefficient = -coefficient;
            } else {
                out += " + ";
            }
        }
        out += formatCoefficient(coefficient);
        for (const auto &[site, p] : term.ops) {
            out += ' ';
            out += p;
            out += std::to_string(site);
        }
        if (!term.variable.empty()) {
            out += ' ' + term.variable;
        }
    }
    return out;
}

} // namespace qf::obs
