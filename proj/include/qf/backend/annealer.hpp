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

#include "qf/backend/accelerator.hpp"

namespace qf {

/**
 * @brief Exact Ising solver for annealing programs built from `qmi` instructions.
 *
 * `qmi(i, i, h)` adds a bias h s_i and `qmi(i, j, J)` a coupler J s_i s_j. Every spin
 * configuration of the buffer's qubits is enumerated; the minimum energy goes to
 * "ground-energy" and each minimizing configuration is recorded once in the counts. A '1'
 * in a bitstring means s = -1 and a '0' means s = +1.
 */
class Annealer final : public Accelerator {
  public:
    static constexpr std::size_t kMaxSpins = 20;

    [[nodiscard]] std::string name() const override { return "anneal"; }
    [[nodiscard]] std::string description() const override {
        return "Exhaustive ground-state search for Ising programs.";
    }

    using Accelerator::execute;
    void execute(const BufferPtr &buffer, const ir::Composite &program) override;
};

/// Ising energy of the spin assignment encoded by `bits` (bit i set means s_i = -1).
double isingEnergy(const ir::Composite &program, std::uint64_t bits, std::size_t nSpins);

} // namespace qf
