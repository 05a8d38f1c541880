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

#include "qf/frontend/compiler.hpp"

namespace qf::frontend {

/**
 * @brief XASM: `Gate(q[i], ..., expr, ...);` statements, integer for-loops, kernel calls and
 * generator calls such as `exp_i_theta(q, t, {{"pauli", "X0 Y1"}});`.
 */
class XasmCompiler final : public Compiler {
  public:
    [[nodiscard]] std::string name() const override { return "xasm"; }
    [[nodiscard]] std::string description() const override {
        return "XASM kernels with loops and circuit generators";
    }
    [[nodiscard]] ir::Composite compileKernel(const KernelUnit &unit,
                                              const KernelLookup &lookup) const override;
    [[nodiscard]] std::string translate(const ir::Composite &composite) const override;
};

/// Line-oriented Quil subset: `RX(theta) 0`, `CNOT 0 1`, `MEASURE 0 [0]`, kernel calls.
class QuilCompiler final : public Compiler {
  public:
    [[nodiscard]] std::string name() const override { return "quil"; }
    [[nodiscard]] std::string description() const override { return "Quil gate subset"; }
    [[nodiscard]] ir::Composite compileKernel(const KernelUnit &unit,
                                              const KernelLookup &lookup) const override;
    [[nodiscard]] std::string translate(const ir::Composite &composite) const override;
};

/// OpenQASM 2 subset: optional header and registers, `rx(t) q[0];`, `measure q[0] -> c[0];`.
class OpenQasmCompiler final : public Compiler {
  public:
    [[nodiscard]] std::string name() const override { return "openqasm"; }
    [[nodiscard]] std::string description() const override { return "OpenQASM 2.0 subset"; }
    [[nodiscard]] ir::Composite compileKernel(const KernelUnit &unit,
                                              const KernelLookup &lookup) const override;
    [[nodiscard]] std::string translate(const ir::Composite &composite) const override;
};

} // namespace qf::frontend
