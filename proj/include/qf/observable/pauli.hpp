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

#include <compare>
#include <complex>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qf/observable/observable.hpp"

namespace qf::obs {

using Complex = std::complex<double>;
using PauliOps = std::vector<std::pair<std::size_t, char>>;

/// Sorted (site, 'X'|'Y'|'Z') factors plus an optional variable tag.
struct PauliTerm {
    PauliOps ops;
    std::string variable;

    [[nodiscard]] bool isIdentity() const noexcept { return ops.empty(); }
    [[nodiscard]] std::vector<std::size_t> sites() const;

    /// "X0X1", or "I" for the identity; a tag is appended as "*name".
    [[nodiscard]] std::string key() const;

    friend auto operator<=>(const PauliTerm &, const PauliTerm &) = default;
    friend bool operator==(const PauliTerm &, const PauliTerm &) = default;
};

/**
 * @brief Weighted sum of Pauli strings.
 *
 * @code
 * auto h = PauliOperator::parse("0.5 + X0X1 - 2.1433 Y0 Y1");
 * auto circuits = h.observe(ansatz); // one per non-identity term
 * @endcode
 *
 * Terms with |coefficient| < 1e-12 are dropped after every operation.
 */
class PauliOperator final : public Observable {
  public:
    using Terms = std::map<PauliTerm, Complex>;

    PauliOperator() = default;
    explicit PauliOperator(Complex constant);
    PauliOperator(PauliOps ops, Complex coefficient = 1.0,
                  std::string variable = {});

    /// Parses `[coef] P<q>... (+|- [coef] P<q>...)*`. Coefficients may be real or `(re, im)`.
    static PauliOperator parse(std::string_view text);

    [[nodiscard]] std::string name() const override { return "pauli"; }
    void fromString(std::string_view text) override { *this = parse(text); }
    [[nodiscard]] std::string toString() const override;
    [[nodiscard]] PauliOperator toPauli() const override { return *this; }

    [[nodiscard]] const Terms &terms() const noexcept { return terms_; }
    [[nodiscard]] std::size_t nTerms() const noexcept { return terms_.size(); }
    [[nodiscard]] bool isZero() const noexcept { return terms_.empty(); }
    [[nodiscard]] Complex identityCoefficient() const;
    /// One past the highest site index.
    [[nodiscard]] std::size_t nQubits() const;

    PauliOperator &operator+=(const PauliOperator &other);
    PauliOperator &operator-=(const PauliOperator &other);
    PauliOperator &operator*=(const PauliOperator &other);
    PauliOperator &operator*=(Complex factor);

    friend PauliOperator operator+(PauliOperator a, const PauliOperator &b) { return a += b; }
    friend PauliOperator operator-(PauliOperator a, const PauliOperator &b) { return a -= b; }
    friend PauliOperator operator*(PauliOperator a, const PauliOperator &b) { return a *= b; }
    friend PauliOperator operator*(PauliOperator a, Complex c) { return a *= c; }
    friend PauliOperator operator*(Complex c, PauliOperator a) { return a *= c; }
    friend PauliOperator operator-(PauliOperator a) { return a *= -1.0; }

    /// Equal term sets with coefficients within `tol`.
    [[nodiscard]] bool approxEqual(const PauliOperator &other, double tol = 1e-12) const;

  private:
    void addTerm(const PauliTerm &term, Complex coefficient);
    void prune();

    Terms terms_;
};

/// Product of two single-site Paulis: returns (phase, result) with result '\0' for identity.
std::pair<Complex, char> multiplyPaulis(char a, char b);

} // namespace qf::obs
