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
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "qf/foundation/registry.hpp"
#include "qf/ir/composite.hpp"
#include "qf/ir/expression.hpp"
#include "qf/ir/lexer.hpp"

namespace qf {
class Accelerator;
}

namespace qf::frontend {

/// Parsed `__qpu__ [void] name(Buffer q, double a, ...)` header.
struct KernelHeader {
    std::string name;
    std::string buffer = "q";
    std::vector<std::string> parameters;
    std::size_t line = 1;
    std::size_t column = 1;
};

/// A kernel's header plus its body tokens (newlines kept, terminated by an End token).
struct KernelUnit {
    KernelHeader header;
    std::vector<ir::Token> body;
};

/**
 * @brief Splits `__qpu__` kernel definitions out of a source string.
 *
 * The body is everything between the outer braces. Text outside kernels must be blank or
 * comments. Throws SyntaxError on malformed headers or unbalanced braces.
 */
std::vector<KernelUnit> splitKernels(std::string_view source);

/// Kernels visible to a compilation: earlier kernels in the same source or database entries.
using KernelLookup = std::function<const ir::Composite *(std::string_view name)>;

/**
 * @brief Shared state while compiling one kernel body.
 *
 * Resolves parameter names, tracks which declared parameters were used with subscripts
 * (a parameter `x` used as `x[0]`..`x[7]` becomes the variables `x[0]`..`x[7]`), inlines
 * kernel calls and builds generator sub-composites.
 */
class KernelBuilder {
  public:
    KernelBuilder(const KernelHeader &header, KernelLookup lookup, ErrorCode errorCode);

    [[nodiscard]] const KernelHeader &header() const noexcept { return header_; }
    [[nodiscard]] ir::Composite &target() noexcept { return target_; }

    /// Loop counters shadow nothing; binding an existing name is an error.
    void bindConstant(const ir::Token &name, long value);
    void unbindConstant(const std::string &name);

    [[nodiscard]] ir::NameResolver resolver();

    /// Parses one parameter expression at `pos` and converts it to an instruction parameter.
    ir::InstrParam parseParam(std::span<const ir::Token> tokens, std::size_t &pos);

    /// Parses a non-negative integer expression (qubit index, loop bound).
    long parseIndex(std::span<const ir::Token> tokens, std::size_t &pos);

    /// Creates the instruction and reports catalog errors at `at`.
    void addInstruction(const ir::Token &at, std::string_view name, std::vector<std::size_t> bits,
                        std::vector<ir::InstrParam> params, std::vector<std::size_t> cbits = {});

    [[nodiscard]] bool isKernel(std::string_view name) const;
    [[nodiscard]] bool isGenerator(std::string_view name) const;

    /// Inlines a copy of a previously compiled kernel, substituting its variables by `args`.
    void inlineCall(const ir::Token &at, const std::vector<ir::Affine> &args);

    /// Appends an expanded generator sub-composite; `variable` is empty for range/qft.
    void addGenerator(const ir::Token &at, const std::string &variable, HetMap options);

    /// Final composite with variables in declaration order (subscripted ones expanded).
    ir::Composite finish();

    [[noreturn]] void error(const ir::Token &at, const std::string &message) const;
    [[noreturn]] void error(ErrorCode code, const ir::Token &at, const std::string &message) const;

  private:
    struct Usage {
        bool plain = false;
        long maxIndex = -1;
    };

    KernelHeader header_;
    KernelLookup lookup_;
    ErrorCode errorCode_;
    ir::Composite target_;
    std::map<std::string, long, std::less<>> constants_;
    std::map<std::string, Usage, std::less<>> usage_;
};

/// Deep copy of `source` with each variable replaced by an affine expression of a new
/// variable (or a constant). The result is a plain composite whose variables are its symbols.
ir::Composite substituteVariables(const ir::Composite &source,
                                  const std::map<std::string, ir::Affine, std::less<>> &mapping);

/// Parses `{{"key", value}, ...}` at `pos`. Values: string, number, or list of numbers.
HetMap parseHetMapLiteral(std::span<const ir::Token> tokens, std::size_t &pos,
                          ErrorCode errorCode = ErrorCode::SyntaxError);

/**
 * @brief Source-language compiler contract.
 *
 * compile() splits kernels and compiles them in order so that later kernels may call earlier
 * ones. Translators lower unsupported gates through the stdlib decompositions first.
 */
class Compiler : public Service {
  public:
    static constexpr std::string_view kServiceKind = "compiler";

    [[nodiscard]] ir::IRContainer compile(std::string_view source) const;

    /// The accelerator is accepted for interface compatibility; compilation does not depend
    /// on it (routing is an explicit IR transformation).
    [[nodiscard]] ir::IRContainer compile(std::string_view source,
                                          const std::shared_ptr<Accelerator> &target) const;

    /// Compiles a single kernel body. `lookup` resolves kernel calls.
    [[nodiscard]] virtual ir::Composite compileKernel(const KernelUnit &unit,
                                                      const KernelLookup &lookup) const = 0;

    /// Emits a full `__qpu__` kernel in this dialect. Throws UntranslatableInstruction.
    [[nodiscard]] virtual std::string translate(const ir::Composite &composite) const = 0;
};

using CompilerPtr = std::shared_ptr<Compiler>;

/// Parameter list for a translated kernel header: one `double` per variable base name.
std::vector<std::string> headerParameters(const ir::Composite &composite);

/// Enabled leaves rewritten into `allowed`; throws UntranslatableInstruction naming `dialect`.
std::vector<ir::Instruction> lowerForDialect(const ir::Composite &composite,
                                             std::span<const ir::OpKind> allowed,
                                             std::string_view dialect);

/// Parameter text usable in every dialect: shortest real or the symbolic source text.
std::string paramText(const ir::InstrParam &param);

} // namespace qf::frontend
