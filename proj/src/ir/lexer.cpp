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

#include "qf/ir/lexer.hpp"

#include <array>
#include <cctype>

namespace qf::ir {

namespace {

constexpr std::array<std::string_view, 10> kTwoCharPuncts = {"->", "++", "--", "+=", "-=",
                                                             "<=", ">=", "==", "!=", "::"};

bool isIdentStart(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool isIdentChar(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }
bool isDigit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

class Scanner {
  public:
    Scanner(std::string_view src, std::size_t firstLine, ErrorCode code)
        : src_(src), line_(firstLine), code_(code) {}

    std::vector<Token> run() {
        std::vector<Token> out;
        while (pos_ < src_.size()) {
            char c = src_[pos_];
            if (c == '\n') {
                out.push_back(make(TokenKind::Newline, "\n"));
                advance();
                continue;
            }
            if (std::isspace(static_cast<unsigned char>(c))) {
                advance();
                continue;
            }
            if (c == '#' || (c == '/' && peek(1) == '/')) {
                while (pos_ < src_.size() && src_[pos_] != '\n') {
                    advance();
                }
                continue;
            }
            if (c == '/' && peek(1) == '*') {
                skipBlockComment();
                continue;
            }
            if (isIdentStart(c)) {
                out.push_back(identifier());
            } else if (isDigit(c) || (c == '.' && isDigit(peek(1)))) {
                out.push_back(number());
            } else if (c == '"') {
                out.push_back(string());
            } else {
                out.push_back(punct());
            }
        }
        out.push_back(make(TokenKind::End, ""));
        return out;
    }

  private:
    [[nodiscard]] char peek(std::size_t ahead) const {
        return pos_ + ahead < src_.size() ? src_[pos_ + ahead] : '\0';
    }

    void advance() {
        if (src_[pos_] == '\n') {
            ++line_;
            column_ = 1;
        } else {
            ++column_;
        }
        ++pos_;
    }

    [[nodiscard]] Token make(TokenKind kind, std::string text) const {
        return Token{kind, std::move(text), line_, column_};
    }

    void skipBlockComment() {
        auto line = line_;
        auto column = column_;
        advance();
        advance();
        while (pos_ < src_.size() && !(src_[pos_] == '*' && peek(1) == '/')) {
            advance();
        }
        if (pos_ >= src_.size()) {
            throw SourceError(code_, line, column, "unterminated block comment");
        }
        advance();
        advance();
    }

    Token identifier() {
        Token tok = make(TokenKind::Identifier, "");
        while (pos_ < src_.size() && isIdentChar(src_[pos_])) {
            tok.text.push_back(src_[pos_]);
            advance();
        }
        return tok;
    }

    Token number() {
        Token tok = make(TokenKind::Integer, "");
        auto take = [&] {
            tok.text.push_back(src_[pos_]);
            advance();
        };
        while (pos_ < src_.size() && isDigit(src_[pos_])) {
            take();
        }
        if (pos_ < src_.size() && src_[pos_] == '.') {
            tok.kind = TokenKind::Real;
            take();
            while (pos_ < src_.size() && isDigit(src_[pos_])) {
                take();
            }
        }
        if (pos_ < src_.size() && (src_[pos_] == 'e' || src_[pos_] == 'E')) {
            char next = peek(1);
            bool signedExp = (next == '+' || next == '-') && isDigit(peek(2));
            if (isDigit(next) || signedExp) {
                tok.kind = TokenKind::Real;
                take();
                if (signedExp) {
                    take();
                }
                while (pos_ < src_.size() && isDigit(src_[pos_])) {
                    take();
                }
            }
        }
        return tok;
    }

    Token string() {
        Token tok = make(TokenKind::String, "");
        advance();
        while (pos_ < src_.size() && src_[pos_] != '"') {
            if (src_[pos_] == '\n') {
                throw SourceError(code_, tok.line, tok.column, "unterminated string literal");
            }
            tok.text.push_back(src_[pos_]);
            advance();
        }
        if (pos_ >= src_.size()) {
            throw SourceError(code_, tok.line, tok.column, "unterminated string literal");
        }
        advance();
        return tok;
    }

    Token punct() {
        Token tok = make(TokenKind::Punct, "");
        for (auto two : kTwoCharPuncts) {
            if (src_[pos_] == two[0] && peek(1) == two[1]) {
                tok.text = std::string(two);
                advance();
                advance();
                return tok;
            }
        }
        constexpr std::string_view singles = "()[]{},;+-*/<>=^.:!&|%";
        if (singles.find(src_[pos_]) == std::string_view::npos) {
            throw SourceError(code_, line_, column_,
                              std::string("unexpected character '") + src_[pos_] + "'");
        }
        tok.text = std::string(1, src_[pos_]);
        advance();
        return tok;
    }

    std::string_view src_;
    std::size_t pos_ = 0;
    std::size_t line_;
    std::size_t column_ = 1;
    ErrorCode code_;
};

} // namespace

std::vector<Token> tokenize(std::string_view source, std::size_t firstLine, ErrorCode errorCode) {
    return Scanner(source, firstLine, errorCode).run();
}

} // namespace qf::ir
