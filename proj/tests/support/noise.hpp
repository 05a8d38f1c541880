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

#include <random>
#include <string>

#include "qf/backend/accelerator.hpp"

namespace qf::oracle {

/**
 * Decorator that corrupts sampled counts with independent readout flips.
 *
 * Options "flip-p01", "flip-p10" and "flip-seed"; every shot of every count entry is
 * re-drawn bit by bit, so the corrupted distribution is an honest sample of the channel.
 */
class FlipNoise final : public qf::AcceleratorDecorator {
  public:
    [[nodiscard]] std::string name() const override { return "flip-noise"; }

  protected:
    void postProcess(qf::QuantumBuffer &buffer) const override {
        const double p01 = configuration().getOr<double>("flip-p01", 0.0);
        const double p10 = configuration().getOr<double>("flip-p10", 0.0);
        std::mt19937_64 rng(configuration().getOr<std::int64_t>("flip-seed", 1));
        std::bernoulli_distribution up(p01);
        std::bernoulli_distribution down(p10);
        qf::obs::Counts noisy;
        for (const auto &[bits, count] : buffer.counts()) {
            for (std::int64_t s = 0; s < count; ++s) {
                std::string read = bits;
                for (auto &c : read) {
                    if (c == '0' && up(rng)) {
                        c = '1';
                    } else if (c == '1' && down(rng)) {
                        c = '0';
                    }
                }
                ++noisy[read];
            }
        }
        buffer.clearMeasurements();
        for (const auto &[bits, count] : noisy) {
            buffer.appendMeasurement(bits, count);
        }
    }
};

} // namespace qf::oracle
