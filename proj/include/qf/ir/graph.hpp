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
#include <utility>
#include <vector>

#include "qf/ir/instruction.hpp"

namespace qf::ir {

/**
 * @brief Qubit-dependency DAG of a flattened instruction list.
 *
 * Node 0 is the entry, node `k` (1-based) is `instructions[k-1]`, and the last node is the
 * exit. An edge `a -> b` means `b` is the next instruction after `a` on some shared qubit.
 */
struct InstrGraph {
    using Edge = std::pair<std::size_t, std::size_t>;

    std::vector<Instruction> instructions;
    std::vector<Edge> edges; // sorted, unique

    [[nodiscard]] std::size_t entry() const noexcept { return 0; }
    [[nodiscard]] std::size_t exit() const noexcept { return instructions.size() + 1; }
    [[nodiscard]] std::size_t nodeCount() const noexcept { return instructions.size() + 2; }

    [[nodiscard]] bool hasEdge(std::size_t from, std::size_t to) const;
    [[nodiscard]] std::vector<std::size_t> successors(std::size_t node) const;

    /// Number of instructions on the longest entry-to-exit path.
    [[nodiscard]] std::size_t depth() const;
};

InstrGraph buildGraph(std::vector<Instruction> instructions);

} // namespace qf::ir
