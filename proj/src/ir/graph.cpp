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

#include "qf/ir/graph.hpp"

#include <algorithm>
#include <map>

namespace qf::ir {

bool InstrGraph::hasEdge(std::size_t from, std::size_t to) const {
    return std::binary_search(edges.begin(), edges.end(), Edge{from, to});
}

std::vector<std::size_t> InstrGraph::successors(std::size_t node) const {
    std::vector<std::size_t> out;
    auto it = std::lower_bound(edges.begin(), edges.end(), Edge{node, 0});
    for (; it != edges.end() && it->first == node; ++it) {
        out.push_back(it->second);
    }
    return out;
}

std::size_t InstrGraph::depth() const {
    // Edges always point forward in node order, so one pass suffices.
    std::vector<std::size_t> longest(nodeCount(), 0);
    for (const auto &[from, to] : edges) {
        std::size_t weight = to == exit() ? 0 : 1;
        longest[to] = std::max(longest[to], longest[from] + weight);
    }
    return longest[exit()];
}

InstrGraph buildGraph(std::vector<Instruction> instructions) {
    InstrGraph graph;
    graph.instructions = std::move(instructions);
    std::map<std::size_t, std::size_t> lastToucher;
    for (std::size_t k = 0; k < graph.instructions.size(); ++k) {
        std::size_t node = k + 1;
        for (auto q : graph.instructions[k].bits()) {
            auto it = lastToucher.find(q);
            graph.edges.emplace_back(it == lastToucher.end() ? graph.entry() : it->second, node);
            lastToucher[q] = node;
        }
    }
    for (const auto &[q, node] : lastToucher) {
        graph.edges.emplace_back(node, graph.exit());
    }
    if (graph.instructions.empty()) {
        graph.edges.emplace_back(graph.entry(), graph.exit());
    }
    std::sort(graph.edges.begin(), graph.edges.end());
    graph.edges.erase(std::unique(graph.edges.begin(), graph.edges.end()), graph.edges.end());
    return graph;
}

} // namespace qf::ir
