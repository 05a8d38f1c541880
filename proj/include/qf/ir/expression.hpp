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

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>

#include "qf/ir/lexer.hpp"

namespace qf::ir {

/// `scale * variable + offset`, or the constant `offset` when `variable` is empty.
struct Affine {
    double scale = 0.0;
    double offset = 0.0;
    std::string variable;

    [[nodiscard]] bool isConstant() const noexcept { return variable.empty(); }

    static Affine constant(double value) { return Affine{0.0, value, {}}; }
    static Affine of(std::string variable) { return Affine{1.0, 0.0, std::move(variable)}; }

    friend bool operator==(const Affine &, const Affine &) = default;
};

/// Shortest decimal text that reads back to the same double.
std::string formatReal(double value);

/// Canonical source text for an affine expression, e.g. `0.5*theta + 1`.
std::string canonicalText(const Affine &expr);

/**
 * @brief Resolves an identifier (optionally subscripted) to an affine value.
 *
 * Return a constant for compile-time names (loop counters), `Affine::of(name)` for free
 * variables, or throw to reject the name.
 */
using NameResolver = std::function<Affine(const Token &name, std::optional<long> index)>;

/**
 * @brief Recursive-descent parser for parameter expressions that are affine in one variable.
 *
 * Grammar: `expr := term (('+'|'-') term)*`, `term := unary (('*'|'/') unary)*`,
 * `unary := ('-'|'+') unary | primary`, `primary := number | pi | name ['[' expr ']'] |
 * '(' expr ')'`. Products of two variables, division by a variable and sums of two different
 * variables are rejected.
 */
class ExprParser {
  public:
    ExprParser(std::span<const Token> tokens, std::size_t &pos, NameResolver resolver,
               ErrorCode errorCode = ErrorCode::SyntaxError);

    Affine parse();

    /// Parses and requires a non-negative integral constant (qubit indices, loop bounds).
    long parseIndex();

    /// True when every identifier consumed so far was `pi` or a free variable.
    [[nodiscard]] bool onlyFreeNames() const noexcept { return onlyFreeNames_; }

    /// Concatenated text of the tokens consumed by the last parse().
    [[nodiscard]] const std::string &consumedText() const noexcept { return consumed_; }

  private:
    Affine expression();
    Affine term();
    Affine unary();
    Affine primary();

    const Token &peek() const;
    const Token &next();
    [[noreturn]] void error(const Token &at, const std::string &message) const;

    std::span<const Token> tokens_;
    std::size_t &pos_;
    NameResolver resolver_;
    ErrorCode errorCode_;
    bool onlyFreeNames_ = true;
    std::string consumed_;
};

/**
 * @brief Symbolic instruction parameter: an affine function of one composite variable.
 *
 * `text` is what gets persisted and emitted by translators; it re-parses to the same
 * scale/offset.
 */
struct ParamExpr {
    std::string variable;
    double scale = 1.0;
    double offset = 0.0;
    std::string text;

    static ParamExpr symbol(std::string name);
    static ParamExpr fromAffine(const Affine &affine, std::string text = {});

    /// Parses standalone text such as `theta/2` or `-2*x[1] + 0.5`.
    static ParamExpr parse(std::string_view text, ErrorCode errorCode = ErrorCode::ParseError);

    [[nodiscard]] Affine affine() const { return Affine{scale, offset, variable}; }
    [[nodiscard]] double evaluate(double value) const noexcept { return scale * value + offset; }

    friend bool operator==(const ParamExpr &, const ParamExpr &) = default;
};

} // namespace qf::ir
