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

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "qf/observable/pauli.hpp"

namespace qf::obs {

/// Ladder-operator product in written order; `second` is true for creation.
struct LadderTerm {
    std::vector<std::pair<std::size_t, bool>> ops;
    std::string variable;

    /// "0^ 1" style key, "I" for the empty product.
    [[nodiscard]] std::string key() const;

    friend auto operator<=>(const LadderTerm &, const LadderTerm &) = default;
    friend bool operator==(const LadderTerm &, const LadderTerm &) = default;
};

/**
 * @brief Sum of fermionic ladder-operator products.
 *
 * Grammar: terms separated by `+`/`-`, each an optional coefficient followed by `n^`
 * (creation) or `n` (annihilation) tokens. A coefficient must be a real literal with a
 * decimal point or exponent (`2.0`, `1e-3`) or a `(re, im)` pair, because a bare integer
 * is an annihilation index. Products are kept in written order (no normal ordering).
 */
class FermionOperator final : public Observable {
  public:
    using Terms = std::map<LadderTerm, Complex>;

    FermionOperator() = default;
    FermionOperator(std::vector<std::pair<std::size_t, bool>> ops, Complex coefficient = 1.0,
                    std::string variable = {});

    static FermionOperator parse(std::string_view text);

    [[nodiscard]] std::string name() const override { return "fermion"; }
    void fromString(std::string_view text) override { *this = parse(text); }
    [[nodiscard]] std::string toString() const override;
    /// Jordan-Wigner encoding.
    [[nodiscard]] PauliOperator toPauli() const override;

    [[nodiscard]] const Terms &terms() const noexcept { return terms_; }
    [[nodiscard]] bool isZero() const noexcept { return terms_.empty(); }

    FermionOperator &operator+=(const FermionOperator &other);
    FermionOperator &operator*=(const FermionOperator &other);
    FermionOperator &operator*=(Complex factor);

    friend FermionOperator operator+(FermionOperator a, const FermionOperator &b) { return a += b; }
    friend FermionOperator operator*(FermionOperator a, const FermionOperator &b) { return a *= b; }
    friend FermionOperator operator*(FermionOperator a, Complex c) { return a *= c; }

  private:
    void addTerm(const LadderTerm &term, Complex coefficient);

    Terms terms_;
};

/**
 * @brief a+_p -> (X_p - iY_p)/2 Z_{p-1}...Z_0 and a_p -> (X_p + iY_p)/2 Z_{p-1}...Z_0,
 * multiplied out term by term.
 */
PauliOperator jordanWigner(const FermionOperator &op);

class JordanWignerTransform final : public ObservableTransform {
  public:
    [[nodiscard]] std::string name() const override { return "jordan-wigner"; }
    [[nodiscard]] ObservablePtr transform(const Observable &input) const override;
};

} // namespace qf::obs
