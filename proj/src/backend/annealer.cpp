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


#include "qf/backend/annealer.hpp"

#include <cmath>
#include <limits>
#include <string>

namespace qf {

namespace {

struct Term {
    std::size_t i;
    std::size_t j;
    double weight;
};

std::vector<Term> collectTerms(const ir::Composite &program) {
    std::vector<Term> terms;
    for (const auto &inst : program.instructions()) {
        if (!inst.isAnnealing()) {
            fail(ErrorCode::MixedModelProgram, "anneal accepts only qmi instructions, found " +
                                                   std::string(inst.name()));
        }
        terms.push_back({inst.bits()[0], inst.bits()[1], inst.numericParams().front()});
    }
    return terms;
}

double spin(std::uint64_t bits, std::size_t q, std::size_t n) {
    return ((bits >> (n - 1 - q)) & 1U) ? -1.0 : 1.0;
}

double energyOf(const std::vector<Term> &terms, std::uint64_t bits, std::size_t n) {
    double e = 0.0;
    for (const auto &t : terms) {
        e += t.i == t.j ? t.weight * spin(bits, t.i, n)
                        : t.weight * spin(bits, t.i, n) * spin(bits, t.j, n);
    }
    return e;
}

} // namespace

double isingEnergy(const ir::Composite &program, std::uint64_t bits, std::size_t nSpins) {
    return energyOf(collectTerms(program), bits, nSpins);
}

void Annealer::execute(const BufferPtr &buffer, const ir::Composite &program) {
    const std::size_t n = buffer->size();
    if (n > kMaxSpins) {
        fail(ErrorCode::InvalidSize, "anneal enumerates at most " + std::to_string(kMaxSpins) +
                                         " spins, buffer has " + std::to_string(n));
    }
    detail::checkProgram(program, *buffer);
    const auto terms = collectTerms(program);

    const std::uint64_t total = std::uint64_t{1} << n;
    double best = std::numeric_limits<double>::infinity();
    std::vector<std::uint64_t> argmins;
    for (std::uint64_t bits = 0; bits < total; ++bits) {
        const double e = energyOf(terms, bits, n);
        // Energies are sums of at most a few hundred terms, so exact ties are compared with
        // a small absolute slack.
        if (e < best - 1e-12) {
            best = e;
            argmins.assign(1, bits);
        } else if (std::abs(e - best) <= 1e-12) {
            argmins.push_back(bits);
        }
    }
    buffer->metadata().insert("ground-energy", best);
    for (auto bits : argmins) {
        std::string s(n, '0');
        for (std::size_t q = 0; q < n; ++q) {
            if ((bits >> (n - 1 - q)) & 1U) {
                s[q] = '1';
            }
        }
        buffer->appendMeasurement(s, 1);
    }
}

} // namespace qf
