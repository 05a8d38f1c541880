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

#include "qf/stdlib/routing.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <numeric>

namespace qf::stdlib {

using ir::Instruction;

namespace {

class Coupling {
  public:
    Coupling(const std::vector<Edge> &edges, std::size_t minSize) : adjacency_(minSize) {
        for (const auto &[a, b] : edges) {
            std::size_t need = std::max(a, b) + 1;
            if (adjacency_.size() < need) {
                adjacency_.resize(need);
            }
            if (a != b) {
                adjacency_[a].push_back(b);
                adjacency_[b].push_back(a);
            }
        }
        for (auto &n : adjacency_) {
            std::sort(n.begin(), n.end());
            n.erase(std::unique(n.begin(), n.end()), n.end());
        }
    }

    [[nodiscard]] std::size_t size() const noexcept { return adjacency_.size(); }

    [[nodiscard]] bool adjacent(std::size_t a, std::size_t b) const {
        return std::binary_search(adjacency_[a].begin(), adjacency_[a].end(), b);
    }

    /// Shortest path from `from` to `to`, inclusive; empty when unreachable.
    [[nodiscard]] std::vector<std::size_t> path(std::size_t from, std::size_t to) const {
        constexpr auto kNone = std::numeric_limits<std::size_t>::max();
        std::vector<std::size_t> parent(size(), kNone);
        std::deque<std::size_t> frontier{from};
        parent[from] = from;
        while (!frontier.empty()) {
            auto node = frontier.front();
            frontier.pop_front();
            if (node == to) {
                break;
            }
            for (auto next : adjacency_[node]) {
                if (parent[next] == kNone) {
                    parent[next] = node;
                    frontier.push_back(next);
                }
            }
        }
        if (parent[to] == kNone) {
            return {};
        }
        std::vector<std::size_t> out{to};
        while (out.back() != from) {
            out.push_back(parent[out.back()]);
        }
        std::reverse(out.begin(), out.end());
        return out;
    }

  private:
    std::vector<std::vector<std::size_t>> adjacency_;
};

} // namespace

RoutingResult routeForConnectivity(const ir::Composite &circuit, const std::vector<Edge> &edges) {
    Coupling coupling(edges, circuit.nQubits());
    std::vector<std::size_t> layout(coupling.size());
    std::iota(layout.begin(), layout.end(), 0);
    std::vector<std::size_t> occupant = layout;

    RoutingResult result{ir::Composite(circuit.name(), circuit.variables()), {}, 0};
    result.circuit.metadata() = circuit.metadata();

    auto swapPhysical = [&](std::size_t p, std::size_t q) {
        Instruction swap(ir::OpKind::Swap, {p, q});
        result.circuit.addInstruction(swap);
        std::swap(occupant[p], occupant[q]);
        layout[occupant[p]] = p;
        layout[occupant[q]] = q;
        ++result.swapsInserted;
    };

    for (const auto &inst : circuit.instructions(false)) {
        const auto &bits = inst.bits();
        bool routed = bits.size() == 2 && !inst.isAnnealing() && inst.enabled();
        if (routed && !coupling.adjacent(layout[bits[0]], layout[bits[1]])) {
            auto route = coupling.path(layout[bits[0]], layout[bits[1]]);
            if (route.empty()) {
                fail(ErrorCode::DisconnectedQubit,
                     "no coupling path between qubits " + std::to_string(bits[0]) + " and " +
                         std::to_string(bits[1]));
            }
            for (std::size_t k = 0; k + 2 < route.size(); ++k) {
                swapPhysical(route[k], route[k + 1]);
            }
        }
        std::vector<std::size_t> physical;
        for (auto b : bits) {
            physical.push_back(layout[b]);
        }
        Instruction mapped(inst.kind(), physical, inst.params(), inst.cbits());
        mapped.setEnabled(inst.enabled());
        result.circuit.addInstruction(std::move(mapped));
    }
    result.finalLayout = layout;
    return result;
}

ir::Composite SwapRouting::transform(const ir::Composite &input, const HetMap &options) const {
    auto flat = options.get<std::vector<std::int64_t>>("edges");
    if (flat.size() % 2 != 0) {
        fail(ErrorCode::BadOption, "\"edges\" must hold an even number of qubit indices");
    }
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < flat.size(); i += 2) {
        if (flat[i] < 0 || flat[i + 1] < 0) {
            fail(ErrorCode::BadOption, "\"edges\" holds a negative qubit index");
        }
        edges.emplace_back(static_cast<std::size_t>(flat[i]), static_cast<std::size_t>(flat[i + 1]));
    }
    auto result = routeForConnectivity(input, edges);
    std::vector<std::int64_t> layout(result.finalLayout.begin(), result.finalLayout.end());
    result.circuit.metadata().insert("final-layout", std::move(layout));
    result.circuit.metadata().insert("swaps-inserted", result.swapsInserted);
    return std::move(result.circuit);
}

} // namespace qf::stdlib
