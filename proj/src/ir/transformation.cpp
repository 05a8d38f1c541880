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

#include "qf/ir/transformation.hpp"

namespace qf::ir {

Instruction IRProvider::createInstruction(std::string_view name, std::vector<std::size_t> bits,
                                          std::vector<InstrParam> params) const {
    return ir::createInstruction(name, std::move(bits), std::move(params));
}

CompositePtr IRProvider::createComposite(std::string name,
                                         std::vector<std::string> variables) const {
    return std::make_shared<Composite>(std::move(name), std::move(variables));
}

std::shared_ptr<IRContainer> IRProvider::createIR() const {
    return std::make_shared<IRContainer>();
}

} // namespace qf::ir
