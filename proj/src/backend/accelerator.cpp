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


#include "qf/backend/accelerator.hpp"

#include <bit>
#include <string>

namespace qf {

namespace {

// Reads a per-qubit probability option given as one real or as a list.
std::vector<double> perQubit(const HetMap &options, std::string_view key, std::size_t n) {
    if (!options.contains(key)) {
        return std::vector<double>(n, 0.0);
    }
    if (options.holds<std::vector<double>>(key) || options.holds<std::vector<std::int64_t>>(key)) {
        auto values = options.get<std::vector<double>>(key);
        if (values.size() < n) {
            fail(ErrorCode::BadOption, "\"" + std::string(key) + "\" lists " +
                                           std::to_string(values.size()) + " values for " +
                                           std::to_string(n) + " qubits");
        }
        return values;
    }
    return std::vector<double>(n, options.get<double>(key));
}

} // namespace

void Accelerator::updateConfiguration(const HetMap &options) { config_.merge(options); }

void Accelerator::execute(const BufferPtr &buffer, const std::vector<ir::CompositePtr> &programs) {
    for (const auto &program : programs) {
        auto child = std::make_shared<QuantumBuffer>(buffer->size(), program->name());
        execute(child, *program);
        buffer->appendChild(program->name(), child);
    }
}

void AcceleratorDecorator::updateConfiguration(const HetMap &options) {
    Accelerator::updateConfiguration(options);
    inner().updateConfiguration(options);
}

void AcceleratorDecorator::execute(const BufferPtr &buffer, const ir::Composite &program) {
    inner().execute(buffer, program);
    postProcess(*buffer);
}

void AcceleratorDecorator::execute(const BufferPtr &buffer,
                                   const std::vector<ir::CompositePtr> &programs) {
    const std::size_t before = buffer->children().size();
    inner().execute(buffer, programs);
    for (std::size_t k = before; k < buffer->children().size(); ++k) {
        postProcess(*buffer->children()[k].second);
    }
}

std::vector<std::pair<std::size_t, std::size_t>> AcceleratorDecorator::connectivity() const {
    return inner().connectivity();
}

Accelerator &AcceleratorDecorator::inner() const {
    if (!inner_) {
        fail(ErrorCode::InitializationError, name() + " decorator has no accelerator to wrap");
    }
    return *inner_;
}

double mitigatedExpectation(const obs::Counts &counts, std::span<const std::size_t> sites,
                            std::span<const double> p01, std::span<const double> p10) {
    const std::size_t k = sites.size();
    std::vector<double> quasi(std::size_t{1} << k, 0.0);
    double total = 0.0;
    for (const auto &[bits, n] : counts) {
        std::size_t index = 0;
        for (auto s : sites) {
            index = (index << 1) | (bits.at(s) == '1' ? 1U : 0U);
        }
        quasi[index] += static_cast<double>(n);
        total += static_cast<double>(n);
    }
    if (total <= 0.0) {
        fail(ErrorCode::EmptyCounts, "no shots to mitigate");
    }
    // The confusion matrix of site j is [[1-p01, p10], [p01, 1-p10]] (row = read, column =
    // prepared); apply its inverse along that site's axis.
    for (std::size_t j = 0; j < k; ++j) {
        const double a = p01[sites[j]];
        const double b = p10[sites[j]];
        const double det = 1.0 - a - b;
        const std::size_t bit = std::size_t{1} << (k - 1 - j);
        for (std::size_t i = 0; i < quasi.size(); ++i) {
            if (i & bit) {
                continue;
            }
            const double r0 = quasi[i];
            const double r1 = quasi[i | bit];
            quasi[i] = ((1.0 - b) * r0 - b * r1) / det;
            quasi[i | bit] = (-a * r0 + (1.0 - a) * r1) / det;
        }
    }
    double value = 0.0;
    for (std::size_t i = 0; i < quasi.size(); ++i) {
        value += (std::popcount(i) % 2 ? -quasi[i] : quasi[i]);
    }
    return value / total;
}

void ReadoutErrorDecorator::postProcess(QuantumBuffer &buffer) const {
    const std::size_t n = buffer.size();
    const auto p01 = perQubit(config_, "p01", n);
    const auto p10 = perQubit(config_, "p10", n);
    for (std::size_t q = 0; q < n; ++q) {
        if (p01[q] < 0.0 || p10[q] < 0.0 || p01[q] + p10[q] >= 1.0) {
            fail(ErrorCode::DegenerateChannel,
                 "qubit " + std::to_string(q) + ": p01 + p10 = " + std::to_string(p01[q] + p10[q]) +
                     " leaves the readout channel non-invertible");
        }
    }
    if (buffer.totalShots() == 0) {
        if (buffer.metadata().contains("exp-val-z")) {
            buffer.metadata().insert("exp-val", buffer.metadata().get<double>("exp-val-z"));
        }
        return;
    }
    std::vector<std::size_t> sites;
    if (buffer.metadata().contains("measured-bits")) {
        for (auto s : buffer.metadata().get<std::vector<std::int64_t>>("measured-bits")) {
            sites.push_back(static_cast<std::size_t>(s));
        }
    } else {
        for (std::size_t q = 0; q < n; ++q) {
            sites.push_back(q);
        }
    }
    buffer.metadata().insert("exp-val", mitigatedExpectation(buffer.counts(), sites, p01, p10));
}

namespace detail {

void checkProgram(const ir::Composite &program, const QuantumBuffer &buffer) {
    if (program.needsExpansion()) {
        fail(ErrorCode::UnexpandedComposite, "'" + program.name() + "' has unexpanded children");
    }
    auto symbols = program.symbols();
    if (!symbols.empty()) {
        fail(ErrorCode::SymbolicProgram,
             "'" + program.name() + "' still depends on '" + symbols.front() + "'");
    }
    for (const auto &inst : program.instructions()) {
        for (auto q : inst.bits()) {
            if (q >= buffer.size()) {
                fail(ErrorCode::QubitOutOfRange, inst.toString() + " on a buffer of " +
                                                     std::to_string(buffer.size()) + " qubits");
            }
        }
        if (inst.isMeasure() && inst.cbits().front() >= buffer.size()) {
            fail(ErrorCode::QubitOutOfRange, inst.toString() + " writes past the classical register");
        }
    }
}

} // namespace detail

} // namespace qf
