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

// Token cursor shared by the dialect parsers. Internal to the frontend.

#include <span>
#include <string>

#include "qf/frontend/compiler.hpp"

namespace qf::frontend::detail {

class Cursor {
  public:
    Cursor(std::span<const ir::Token> tokens, KernelBuilder &builder, bool skipNewlines)
        : tokens_(tokens), builder_(builder), skipNewlines_(skipNewlines) {}

    const ir::Token &peek() {
        skip();
        return tokens_[pos_];
    }
    const ir::Token &peekRaw() const { return tokens_[pos_]; }
    const ir::Token &next() {
        skip();
        const ir::Token &t = tokens_[pos_];
        if (!t.is(ir::TokenKind::End)) {
            ++pos_;
        }
        return t;
    }
    bool accept(std::string_view punct) {
        if (peek().isPunct(punct)) {
            ++pos_;
            return true;
        }
        return false;
    }
    const ir::Token &expect(std::string_view punct) {
        if (!peek().isPunct(punct)) {
            const ir::Token &t = peek();
            builder_.error(t, "expected '" + std::string(punct) + "'" + found(t));
        }
        return next();
    }
    const ir::Token &expectIdentifier(const std::string &what) {
        if (!peek().is(ir::TokenKind::Identifier)) {
            builder_.error(peek(), "expected " + what + found(peek()));
        }
        return next();
    }
    bool atEnd() { return peek().is(ir::TokenKind::End); }

    /// Lookahead past the current token without consuming; newlines skipped when enabled.
    const ir::Token &peekAhead(std::size_t k) {
        skip();
        std::size_t p = pos_;
        for (std::size_t i = 0; i < k && !tokens_[p].is(ir::TokenKind::End); ++i) {
            ++p;
            while (skipNewlines_ && tokens_[p].is(ir::TokenKind::Newline)) {
                ++p;
            }
        }
        return tokens_[p];
    }

    ir::InstrParam param() {
        skip();
        return builder_.parseParam(tokens_, pos_);
    }
    long index() {
        skip();
        return builder_.parseIndex(tokens_, pos_);
    }
    ir::Affine affine() {
        skip();
        ir::ExprParser parser(tokens_, pos_, builder_.resolver());
        return parser.parse();
    }
    HetMap hetMap() {
        skip();
        return parseHetMapLiteral(tokens_, pos_);
    }

    /// `( [buffer ,] expr {, expr} )` after a kernel name; the buffer argument is optional.
    std::vector<ir::Affine> callArguments() {
        expect("(");
        std::vector<ir::Affine> args;
        if (peek().isIdent(builder_.header().buffer) &&
            (peekAhead(1).isPunct(",") || peekAhead(1).isPunct(")"))) {
            next();
            accept(",");
        }
        while (!peek().isPunct(")")) {
            args.push_back(affine());
            if (!accept(",")) {
                break;
            }
        }
        expect(")");
        return args;
    }

    [[nodiscard]] std::size_t position() const noexcept { return pos_; }
    void seek(std::size_t pos) noexcept { pos_ = pos; }
    [[nodiscard]] std::span<const ir::Token> tokens() const noexcept { return tokens_; }
    KernelBuilder &builder() noexcept { return builder_; }

    static std::string found(const ir::Token &t) {
        if (t.is(ir::TokenKind::End)) {
            return ", found end of kernel";
        }
        if (t.is(ir::TokenKind::Newline)) {
            return ", found end of line";
        }
        return ", found '" + t.text + "'";
    }

  private:
    void skip() {
        while (skipNewlines_ && tokens_[pos_].is(ir::TokenKind::Newline)) {
            ++pos_;
        }
    }

    std::span<const ir::Token> tokens_;
    KernelBuilder &builder_;
    bool skipNewlines_;
    std::size_t pos_ = 0;
};

} // namespace qf::frontend::detail
