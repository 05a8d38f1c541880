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
#include <cstdint>
#include <map>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qf/foundation/registry.hpp"
#include "qf/ir/composite.hpp"

namespace qf::obs {

class PauliOperator;

/**
 * @brief A measurable operator.
 *
 * observe() turns an unmeasured circuit into one measured circuit per non-identity Pauli
 * term. Each returned composite carries metadata "term" (key such as "X0X1") and
 * "coefficient" (real part of the term weight).
 */
class Observable : public Service {
  public:
    static constexpr std::string_view kServiceKind = "observable";

    virtual void fromString(std::string_view text) = 0;
    [[nodiscard]] virtual std::string toString() const = 0;

    /// Qubit form of this operator.
    [[nodiscard]] virtual PauliOperator toPauli() const = 0;

    [[nodiscard]] std::vector<ir::CompositePtr> observe(const ir::Composite &circuit) const;

    /// Real part of the identity-term weight (the energy offset).
    [[nodiscard]] double constantTerm() const;
};

using ObservablePtr = std::shared_ptr<Observable>;

/// Maps one observable to another (e.g. fermion to qubit encodings).
class ObservableTransform : public Service {
  public:
    static constexpr std::string_view kServiceKind = "observabletransform";

    [[nodiscard]] virtual ObservablePtr transform(const Observable &input) const = 0;
};

using Counts = std::map<std::string, std::int64_t, std::less<>>;

/**
 * @brief Parity average over `sites`: even parity contributes +1, odd -1, weighted by
 * frequency. Character `i` of a bitstring is qubit `i`. Throws EmptyCounts when no shots.
 */
double expectationFromCounts(const Counts &counts, std::span<const std::size_t> sites);

/// Parity average over every bit of each bitstring.
double expectationFromCounts(const Counts &counts);

} // namespace qf::obs
