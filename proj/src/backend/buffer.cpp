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


#include "qf/backend/buffer.hpp"

namespace qf {

QuantumBuffer::QuantumBuffer(std::size_t size, std::string name)
    : size_(size), name_(std::move(name)) {
    if (size == 0) {
        fail(ErrorCode::InvalidSize, "a buffer needs at least one qubit");
    }
}

void QuantumBuffer::appendMeasurement(const std::string &bits, std::int64_t count) {
    if (bits.size() != size_) {
        fail(ErrorCode::InvalidSize, "bitstring '" + bits + "' does not match buffer size " +
                                         std::to_string(size_));
    }
    counts_[bits] += count;
}

std::int64_t QuantumBuffer::totalShots() const noexcept {
    std::int64_t total = 0;
    for (const auto &[bits, n] : counts_) {
        total += n;
    }
    return total;
}

BufferPtr QuantumBuffer::appendChild(std::string label, BufferPtr child) {
    children_.emplace_back(std::move(label), child);
    return child;
}

double QuantumBuffer::getExpectationValueZ() const {
    if (totalShots() > 0) {
        return obs::expectationFromCounts(counts_);
    }
    if (metadata_.contains("exp-val-z")) {
        return metadata_.get<double>("exp-val-z");
    }
    fail(ErrorCode::EmptyBuffer, "buffer '" + name_ + "' holds neither counts nor exp-val-z");
}

std::vector<double> QuantumBuffer::distribution() const {
    const auto total = static_cast<double>(totalShots());
    if (total == 0.0) {
        fail(ErrorCode::EmptyBuffer, "buffer '" + name_ + "' holds no counts");
    }
    std::vector<double> out(std::size_t{1} << size_, 0.0);
    for (const auto &[bits, n] : counts_) {
        std::size_t index = 0;
        for (char c : bits) {
            index = (index << 1) | (c == '1' ? 1U : 0U);
        }
        out[index] += static_cast<double>(n) / total;
    }
    return out;
}

} // namespace qf
