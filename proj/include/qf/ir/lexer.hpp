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

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "qf/foundation/error.hpp"

namespace qf::ir {

enum class TokenKind { Identifier, Integer, Real, String, Punct, Newline, End };

struct Token {
    TokenKind kind = TokenKind::End;
    std::string text;
    std::size_t line = 1;
    std::size_t column = 1;

    [[nodiscard]] bool is(TokenKind k) const noexcept { return kind == k; }
    [[nodiscard]] bool isPunct(std::string_view p) const noexcept {
        return kind == TokenKind::Punct && text == p;
    }
    [[nodiscard]] bool isIdent(std::string_view name) const noexcept {
        return kind == TokenKind::Identifier && text == name;
    }
};

/**
 * @brief Tokenizer shared by the QASM dialect parsers and the parameter-expression parser.
 *
 * Line comments (`//`, `#`) and C block comments are dropped. Newlines are emitted as tokens so that
 * line-oriented dialects (Quil) can use them; other parsers skip them. The token list always
 * ends with an End token. Line/column positions are 1-based and offset by `firstLine`.
 */
std::vector<Token> tokenize(std::string_view source, std::size_t firstLine = 1,
                            ErrorCode errorCode = ErrorCode::SyntaxError);

} // namespace qf::ir
