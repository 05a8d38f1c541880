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


#include "qf/backend/statevector.hpp"

#include <bit>
#include <cmath>
#include <string>

#include "qf/foundation/error.hpp"
#include "qf/stdlib/gates.hpp"

namespace qf {

StateVector::StateVector(std::size_t nQubits) : n_(nQubits), amps_(std::size_t{1} << nQubits) {
    amps_[0] = 1.0;
}

void StateVector::apply(const CMatrix &unitary, std::span<const std::size_t> qubits) {
    const std::size_t k = qubits.size();
    const std::size_t sub = std::size_t{1} << k;
    std::vector<std::size_t> offsets(sub, 0);
    std::size_t targets = 0;
    for (std::size_t j = 0; j < sub; ++j) {
        for (std::size_t b = 0; b < k; ++b) {
            if ((j >> (k - 1 - b)) & 1U) {
                offsets[j] |= mask(qubits[b]);
            }
        }
    }
    for (auto q : qubits) {
        targets |= mask(q);
    }
    std::vector<Complex> in(sub);
    // Visit each group of 2^k amplitudes once, from the member with all target bits clear.
    for (std::size_t base = 0; base < amps_.size(); ++base) {
        if (base & targets) {
            continue;
        }
        for (std::size_t j = 0; j < sub; ++j) {
            in[j] = amps_[base | offsets[j]];
        }
        for (std::size_t r = 0; r < sub; ++r) {
            Complex acc = 0.0;
            for (std::size_t c = 0; c < sub; ++c) {
                acc += unitary(r, c) * in[c];
            }
            amps_[base | offsets[r]] = acc;
        }
    }
}

void StateVector::apply(const ir::Instruction &gate) {
    for (auto q : gate.bits()) {
        if (q >= n_) {
            fail(ErrorCode::QubitOutOfRange, gate.toString() + " on a " + std::to_string(n_) +
                                                 "-qubit state");
        }
    }
    apply(stdlib::gateUnitary(gate), gate.bits());
}

double StateVector::probabilityOfOne(std::size_t qubit) const {
    double p = 0.0;
    for (std::size_t i = 0; i < amps_.size(); ++i) {
        if (i & mask(qubit)) {
            p += std::norm(amps_[i]);
        }
    }
    return p;
}

bool StateVector::measure(std::size_t qubit, double uniform) {
    const double p1 = probabilityOfOne(qubit);
    const bool one = uniform < p1;
    const double scale = 1.0 / std::sqrt(one ? p1 : 1.0 - p1);
    for (std::size_t i = 0; i < amps_.size(); ++i) {
        const bool bit = (i & mask(qubit)) != 0;
        amps_[i] = bit == one ? amps_[i] * scale : Complex(0.0);
    }
    return one;
}

std::vector<double> StateVector::probabilities() const {
    std::vector<double> out(amps_.size());
    for (std::size_t i = 0; i < amps_.size(); ++i) {
        out[i] = std::norm(amps_[i]);
    }
    return out;
}

double StateVector::norm() const {
    double total = 0.0;
    for (const auto &a : amps_) {
        total += std::norm(a);
    }
    return std::sqrt(total);
}

double StateVector::parityExpectation(std::span<const std::size_t> qubits) const {
    std::size_t m = 0;
    for (auto q : qubits) {
        m |= mask(q);
    }
    double out = 0.0;
    for (std::size_t i = 0; i < amps_.size(); ++i) {
        const bool odd = (std::popcount(i & m) & 1) != 0;
        out += odd ? -std::norm(amps_[i]) : std::norm(amps_[i]);
    }
    return out;
}

} // namespace qf
