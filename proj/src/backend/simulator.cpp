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


#include "qf/backend/simulator.hpp"

#include <algorithm>
#include <string>

#include "qf/backend/statevector.hpp"

namespace qf {

namespace {

struct Readout {
    std::size_t qubit;
    std::size_t cbit;
};

// True when no gate touches a qubit after it has been measured.
bool measurementsTerminal(const std::vector<ir::Instruction> &program) {
    std::vector<bool> measured;
    for (const auto &inst : program) {
        for (auto q : inst.bits()) {
            if (q >= measured.size()) {
                measured.resize(q + 1, false);
            }
        }
        if (inst.isMeasure()) {
            measured[inst.bits().front()] = true;
            continue;
        }
        for (auto q : inst.bits()) {
            if (measured[q]) {
                return false;
            }
        }
    }
    return true;
}

std::size_t sampleIndex(const std::vector<double> &cdf, double u) {
    auto it = std::upper_bound(cdf.begin(), cdf.end(), u * cdf.back());
    return std::min(static_cast<std::size_t>(it - cdf.begin()), cdf.size() - 1);
}

} // namespace

StatevectorSimulator::StatevectorSimulator() : rng_(std::random_device{}()) {}

void StatevectorSimulator::updateConfiguration(const HetMap &options) {
    Accelerator::updateConfiguration(options);
    if (options.contains("seed")) {
        rng_.seed(static_cast<std::uint64_t>(options.get<std::int64_t>("seed")));
    }
}

void StatevectorSimulator::execute(const BufferPtr &buffer, const ir::Composite &program) {
    const std::size_t n = buffer->size();
    if (n > kMaxQubits) {
        fail(ErrorCode::InvalidSize, "sim is limited to " + std::to_string(kMaxQubits) +
                                         " qubits, buffer has " + std::to_string(n));
    }
    if (program.hasAnnealing()) {
        fail(ErrorCode::MixedModelProgram, "sim runs gate programs only");
    }
    detail::checkProgram(program, *buffer);
    const auto insts = program.instructions();
    const std::int64_t shots = config_.getOr<std::int64_t>("shots", 0);
    if (shots < 0) {
        fail(ErrorCode::BadOption, "\"shots\" must not be negative");
    }

    std::vector<Readout> readouts;
    for (const auto &inst : insts) {
        if (inst.isMeasure()) {
            readouts.push_back({inst.bits().front(), inst.cbits().front()});
        }
    }
    const bool measureAll = readouts.empty();
    if (measureAll) {
        for (std::size_t q = 0; q < n; ++q) {
            readouts.push_back({q, q});
        }
    }
    std::vector<std::int64_t> measuredBits;
    for (const auto &r : readouts) {
        if (std::find(measuredBits.begin(), measuredBits.end(), r.cbit) == measuredBits.end()) {
            measuredBits.push_back(static_cast<std::int64_t>(r.cbit));
        }
    }
    std::sort(measuredBits.begin(), measuredBits.end());
    buffer->metadata().insert("measured-bits", measuredBits);

    std::uniform_real_distribution<double> uniform(0.0, 1.0);

    if (shots == 0) {
        StateVector state(n);
        for (const auto &inst : insts) {
            if (!inst.isMeasure()) {
                state.apply(inst);
            }
        }
        // Parity over classical bits: a bit written twice keeps the last qubit.
        std::vector<std::size_t> source(n, n);
        for (const auto &r : readouts) {
            source[r.cbit] = r.qubit;
        }
        std::vector<std::size_t> parityQubits;
        for (auto s : source) {
            if (s < n) {
                parityQubits.push_back(s);
            }
        }
        buffer->metadata().insert("exp-val-z", state.parityExpectation(parityQubits));
        if (n <= kMaxReportedQubits) {
            std::vector<double> flat;
            flat.reserve(2 * state.amplitudes().size());
            for (const auto &a : state.amplitudes()) {
                flat.push_back(a.real());
                flat.push_back(a.imag());
            }
            buffer->metadata().insert("statevector", std::move(flat));
            buffer->metadata().insert("probabilities", state.probabilities());
        }
        return;
    }

    buffer->metadata().insert("shots", shots);
    if (measureAll || measurementsTerminal(insts)) {
        StateVector state(n);
        for (const auto &inst : insts) {
            if (!inst.isMeasure()) {
                state.apply(inst);
            }
        }
        auto cdf = state.probabilities();
        for (std::size_t i = 1; i < cdf.size(); ++i) {
            cdf[i] += cdf[i - 1];
        }
        obs::Counts counts;
        std::string bits(n, '0');
        for (std::int64_t s = 0; s < shots; ++s) {
            const std::size_t index = sampleIndex(cdf, uniform(rng_));
            std::fill(bits.begin(), bits.end(), '0');
            for (const auto &r : readouts) {
                bits[r.cbit] = ((index >> (n - 1 - r.qubit)) & 1U) ? '1' : '0';
            }
            ++counts[bits];
        }
        for (const auto &[key, count] : counts) {
            buffer->appendMeasurement(key, count);
        }
        return;
    }

    // Mid-circuit measurement: one trajectory per shot.
    obs::Counts counts;
    for (std::int64_t s = 0; s < shots; ++s) {
        StateVector state(n);
        std::string bits(n, '0');
        for (const auto &inst : insts) {
            if (inst.isMeasure()) {
                const bool one = state.measure(inst.bits().front(), uniform(rng_));
                bits[inst.cbits().front()] = one ? '1' : '0';
            } else {
                state.apply(inst);
            }
        }
        ++counts[bits];
    }
    for (const auto &[key, count] : counts) {
        buffer->appendMeasurement(key, count);
    }
}

} // namespace qf
