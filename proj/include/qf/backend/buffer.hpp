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
#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qf/foundation/het_map.hpp"
#include "qf/observable/observable.hpp"

namespace qf {

class QuantumBuffer;
using BufferPtr = std::shared_ptr<QuantumBuffer>;

/**
 * @brief A qubit register together with everything an execution produced.
 *
 * Count keys are bitstrings of length size(); character `i` is the outcome of classical bit
 * `i`, which is qubit `i` unless a Measure redirected it. Unmeasured positions read '0'.
 */
class QuantumBuffer {
  public:
    /// Throws InvalidSize for zero qubits.
    explicit QuantumBuffer(std::size_t size, std::string name = "q");

    [[nodiscard]] std::size_t size() const noexcept { return size_; }
    [[nodiscard]] const std::string &name() const noexcept { return name_; }

    [[nodiscard]] const obs::Counts &counts() const noexcept { return counts_; }
    /// Throws InvalidSize when the bitstring length differs from size().
    void appendMeasurement(const std::string &bits, std::int64_t count = 1);
    void clearMeasurements() noexcept { counts_.clear(); }
    [[nodiscard]] std::int64_t totalShots() const noexcept;

    [[nodiscard]] HetMap &metadata() noexcept { return metadata_; }
    [[nodiscard]] const HetMap &metadata() const noexcept { return metadata_; }

    BufferPtr appendChild(std::string label, BufferPtr child);
    [[nodiscard]] const std::vector<std::pair<std::string, BufferPtr>> &children() const noexcept {
        return children_;
    }

    /**
     * Parity average over all bits when counts exist, otherwise the exact-mode "exp-val-z"
     * entry. Throws EmptyBuffer when neither is available.
     */
    [[nodiscard]] double getExpectationValueZ() const;

    /// Empirical distribution indexed by the bitstring read as a binary number (bit 0 leftmost).
    [[nodiscard]] std::vector<double> distribution() const;

  private:
    std::size_t size_;
    std::string name_;
    obs::Counts counts_;
    HetMap metadata_;
    std::vector<std::pair<std::string, BufferPtr>> children_;
};

} // namespace qf
