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

#include "qf/observable/observable.hpp"

#include <numbers>

#include "qf/observable/pauli.hpp"

namespace qf::obs {

using ir::Instruction;
using ir::OpKind;

std::vector<ir::CompositePtr> Observable::observe(const ir::Composite &circuit) const {
    if (circuit.hasMeasurement()) {
        fail(ErrorCode::AlreadyMeasured, "'" + circuit.name() + "' already contains Measure");
    }
    const auto pauli = toPauli();
    std::vector<ir::CompositePtr> out;
    for (const auto &[term, coefficient] : pauli.terms()) {
        if (term.isIdentity()) {
            continue;
        }
        if (!term.variable.empty()) {
            fail(ErrorCode::SymbolicProgram,
                 "term " + term.key() + " has a symbolic coefficient; observe needs numbers");
        }
        auto measured = std::make_shared<ir::Composite>(term.key(), circuit.variables());
        for (const auto &child : circuit.children()) {
            measured->children().push_back(child);
        }
        // Rotate each factor's eigenbasis onto Z: H for X, Rx(pi/2) for Y.
        for (const auto &[site, p] : term.ops) {
            if (p == 'X') {
                measured->addInstruction(Instruction(OpKind::H, {site}));
            } else if (p == 'Y') {
                measured->addInstruction(Instruction(OpKind::Rx, {site}, {std::numbers::pi / 2}));
            }
        }
        for (auto site : term.sites()) {
            measured->addInstruction(Instruction(OpKind::Measure, {site}));
        }
        measured->metadata().insert("term", term.key());
        measured->metadata().insert("coefficient", coefficient.real());
        out.push_back(std::move(measured));
    }
    return out;
}

double Observable::constantTerm() const { return toPauli().identityCoefficient().real(); }

double expectationFromCounts(const Counts &counts, std::span<const std::size_t> sites) {
    std::int64_t total = 0;
    double weighted = 0.0;
    for (const auto &[bits, n] : counts) {
        int parity = 0;
        for (auto site : sites) {
            if (site >= bits.size()) {
                fail(ErrorCode::QubitOutOfRange, "site " + std::to_string(site) +
                                                     " is outside bitstring '" + bits + "'");
            }
            parity ^= bits[site] == '1' ? 1 : 0;
        }
        weighted += static_cast<double>(parity ? -n : n);
        total += n;
    }
    if (total <= 0) {
        fail(ErrorCode::EmptyCounts, "no shots recorded");
    }
    return weighted / static_cast<double>(total);
}

double expectationFromCounts(const Counts &counts) {
    std::int64_t total = 0;
    double weighted = 0.0;
    for (const auto &[bits, n] : counts) {
        auto ones = std::count(bits.begin(), bits.end(), '1');
        weighted += static_cast<double>(ones % 2 ? -n : n);
        total += n;
    }
    if (total <= 0) {
        fail(ErrorCode::EmptyCounts, "no shots recorded");
    }
    return weighted / static_cast<double>(total);
}

} // namespace qf::obs
