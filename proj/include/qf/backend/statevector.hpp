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

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include "qf/ir/instruction.hpp"
#include "qf/stdlib/matrix.hpp"

namespace qf {

/**
 * @brief Dense n-qubit state, qubit 0 being the most significant bit of the basis index.
 */
class StateVector {
  public:
    /// |0...0> on `nQubits` qubits.
    explicit StateVector(std::size_t nQubits);

    [[nodiscard]] std::size_t nQubits() const noexcept { return n_; }
    [[nodiscard]] const std::vector<Complex> &amplitudes() const noexcept { return amps_; }

    /// Applies a 2^k x 2^k unitary; qubits[0] is the high-order operand.
    void apply(const CMatrix &unitary, std::span<const std::size_t> qubits);
    /// Applies a concrete gate instruction (Measure and qmi are rejected).
    void apply(const ir::Instruction &gate);

    [[nodiscard]] double probabilityOfOne(std::size_t qubit) const;
    /**
     * Projects `qubit` onto the outcome selected by `uniform` in [0, 1) and renormalizes.
     * Returns the outcome.
     */
    bool measure(std::size_t qubit, double uniform);

    [[nodiscard]] std::vector<double> probabilities() const;
    [[nodiscard]] double norm() const;
    /// <Z...Z> over `qubits`; 1 for an empty set.
    [[nodiscard]] double parityExpectation(std::span<const std::size_t> qubits) const;

  private:
    [[nodiscard]] std::size_t mask(std::size_t qubit) const noexcept {
        return std::size_t{1} << (n_ - 1 - qubit);
    }

    std::size_t n_;
    std::vector<Complex> amps_;
};

} // namespace qf
