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

#include "qf/ir/transformation.hpp"

namespace qf::stdlib {

using Edge = std::pair<std::size_t, std::size_t>;

struct RoutingResult {
    ir::Composite circuit;
    /// finalLayout[logical] is the physical qubit holding that logical qubit at the end.
    std::vector<std::size_t> finalLayout;
    std::size_t swapsInserted = 0;
};

/**
 * @brief Greedy shortest-path SWAP insertion.
 *
 * Starts from the identity layout. Each two-qubit gate whose operands are not adjacent moves
 * its first operand along a BFS shortest path until it neighbours the second. Measure keeps
 * its logical classical targets. Throws DisconnectedQubit when no path exists.
 */
RoutingResult routeForConnectivity(const ir::Composite &circuit, const std::vector<Edge> &edges);

/// Option "edges": flat integer list `[a0, b0, a1, b1, ...]`. Output metadata
/// "final-layout" holds RoutingResult::finalLayout.
class SwapRouting final : public ir::IRTransformation {
  public:
    [[nodiscard]] std::string name() const override { return "swap-routing"; }
    [[nodiscard]] std::string description() const override {
        return "Inserts Swap chains so two-qubit gates act on coupled qubits.";
    }
    [[nodiscard]] ir::Composite transform(const ir::Composite &input,
                                          const HetMap &options) const override;
};

} // namespace qf::stdlib
