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

// Random program generators shared by the unit suites and the acceptance runner.

#include <random>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "qf/ir/composite.hpp"

namespace qf::fixtures {

/// Random circuit over variables "a" and "b"; about a third of the angles become affine
/// expressions in one of them.
inline ir::Composite randomSymbolic(std::mt19937_64 &rng, std::size_t n, std::size_t depth) {
    ir::Composite c("rand", {"a", "b"});
    auto insts = oracle::toInstructions(oracle::randomCircuit(rng, n, depth, true));
    std::uniform_int_distribution<int> coin(0, 2);
    for (auto &inst : insts) {
        for (std::size_t p = 0; p < inst.params().size(); ++p) {
            switch (coin(rng)) {
            case 0:
                inst.setParam(p, ir::ParamExpr::parse("2*a + 0.5"));
                break;
            case 1:
                inst.setParam(p, ir::ParamExpr::parse("-b/3"));
                break;
            default:
                break;
            }
        }
    }
    c.addInstructions(std::move(insts));
    return c;
}

/// Random three-qubit ansatz over "a".."d" mixing every rotation kind, shared parameters
/// and scaled occurrences.
inline ir::Composite randomAnsatz(std::mt19937_64 &rng) {
    using ir::createInstruction;
    const std::vector<std::string> vars{"a", "b", "c", "d"};
    ir::Composite c("random", vars);
    std::uniform_int_distribution<int> kind(0, 4);
    std::uniform_int_distribution<std::size_t> qubit(0, 2);
    std::uniform_int_distribution<std::size_t> var(0, 3);
    std::uniform_real_distribution<double> angle(-3.0, 3.0);
    const std::vector<std::string> scales{"", "0.5*", "-2*", "3*"};
    auto expr = [&](std::size_t v) {
        return ir::ParamExpr::parse(scales[var(rng)] + vars[v] + " + 0.25");
    };
    for (std::size_t v = 0; v < 4; ++v) {
        c.addInstruction(createInstruction("Ry", {v % 3}, {expr(v)}));
    }
    for (int g = 0; g < 8; ++g) {
        const auto q = qubit(rng);
        const auto r = (q + 1) % 3;
        switch (kind(rng)) {
        case 0:
            c.addInstruction(createInstruction("Rx", {q}, {expr(var(rng))}));
            break;
        case 1:
            c.addInstruction(createInstruction("Rz", {q}, {expr(var(rng))}));
            break;
        case 2:
            c.addInstruction(createInstruction("CPhase", {q, r}, {expr(var(rng))}));
            break;
        case 3:
            c.addInstruction(createInstruction("U", {q}, {expr(var(rng)), angle(rng), expr(var(rng))}));
            break;
        default:
            c.addInstruction(createInstruction("CX", {q, r}));
        }
    }
    return c;
}

} // namespace qf::fixtures
