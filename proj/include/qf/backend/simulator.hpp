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

#include <cstdint>
#include <random>

#include "qf/backend/accelerator.hpp"

namespace qf {

/**
 * @brief Dense statevector simulator for up to 20 qubits.
 *
 * Options: "shots" (> 0 samples counts; absent or 0 selects exact mode) and "seed".
 *
 * Sampled mode draws every shot from the final state when all measurements are terminal and
 * otherwise re-runs the program per shot, collapsing at each Measure. A program without any
 * Measure is sampled on every qubit.
 *
 * Exact mode writes "exp-val-z" (Z parity over the measured classical bits) and, up to 10
 * qubits, "statevector" (interleaved real and imaginary parts) and "probabilities".
 * Both modes record "measured-bits".
 */
class StatevectorSimulator final : public Accelerator {
  public:
    static constexpr std::size_t kMaxQubits = 20;
    static constexpr std::size_t kMaxReportedQubits = 10;

    StatevectorSimulator();

    [[nodiscard]] std::string name() const override { return "sim"; }
    [[nodiscard]] std::string description() const override {
        return "Dense statevector simulation with exact and sampled modes.";
    }

    void updateConfiguration(const HetMap &options) override;

    using Accelerator::execute;
    void execute(const BufferPtr &buffer, const ir::Composite &program) override;

  private:
    std::mt19937_64 rng_;
};

} // namespace qf
