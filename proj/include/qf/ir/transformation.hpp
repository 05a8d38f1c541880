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

#include <string>
#include <string_view>
#include <vector>

#include "qf/foundation/het_map.hpp"
#include "qf/foundation/registry.hpp"
#include "qf/ir/composite.hpp"

namespace qf::ir {

/// IR-to-IR pass. Implementations never modify their input.
class IRTransformation : public Service {
  public:
    static constexpr std::string_view kServiceKind = "irtransformation";

    [[nodiscard]] virtual Composite transform(const Composite &input,
                                              const HetMap &options) const = 0;
};

class IdentityTransformation final : public IRTransformation {
  public:
    [[nodiscard]] std::string name() const override { return "identity"; }
    [[nodiscard]] std::string description() const override { return "Returns a copy."; }
    [[nodiscard]] Composite transform(const Composite &input, const HetMap &) const override {
        return input;
    }
};

/// Factory decoupling callers from concrete IR types.
class IRProvider : public Service {
  public:
    static constexpr std::string_view kServiceKind = "irprovider";

    [[nodiscard]] virtual Instruction createInstruction(std::string_view name,
                                                        std::vector<std::size_t> bits,
                                                        std::vector<InstrParam> params = {}) const;
    [[nodiscard]] virtual CompositePtr createComposite(std::string name,
                                                       std::vector<std::string> variables = {}) const;
    [[nodiscard]] virtual std::shared_ptr<IRContainer> createIR() const;
};

class QuantumIRProvider final : public IRProvider {
  public:
    [[nodiscard]] std::string name() const override { return "quantum"; }
};

} // namespace qf::ir
