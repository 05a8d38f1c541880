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

#include <memory>
#include <span>
#include <string>
#include <vector>

#include "qf/algorithm/optimizer.hpp"
#include "qf/backend/accelerator.hpp"
#include "qf/observable/observable.hpp"

namespace qf {

/// A hybrid workflow configured once through initialize() and run against a buffer.
class Algorithm : public Service {
  public:
    static constexpr std::string_view kServiceKind = "algorithm";

    /// Throws InitializationError naming the first missing required key.
    virtual void initialize(const HetMap &parameters) = 0;
    virtual void execute(const BufferPtr &buffer) const = 0;
};

using AlgorithmPtr = std::shared_ptr<Algorithm>;

/**
 * @brief Variational eigensolver.
 *
 * Required keys: "ansatz" (ir::CompositePtr), "observable" (an observable handle),
 * "accelerator" (AcceleratorPtr) and "optimizer" (OptimizerPtr). Each objective evaluation
 * runs all term circuits in one batched call and appends one child per term, labelled by the
 * term key, with metadata "parameters", "term" and "exp-val". Writes "opt-val",
 * "opt-params" and the objective count "opt-evaluations" on the parent. A term buffer's
 * "exp-val" (set by mitigating decorators) is preferred over its raw Z parity.
 */
class Vqe final : public Algorithm {
  public:
    [[nodiscard]] std::string name() const override { return "vqe"; }
    [[nodiscard]] std::string description() const override {
        return "Variational minimization of an observable's expectation value.";
    }

    void initialize(const HetMap &parameters) override;
    void execute(const BufferPtr &buffer) const override;

  private:
    ir::CompositePtr ansatz_;
    obs::ObservablePtr observable_;
    AcceleratorPtr accelerator_;
    OptimizerPtr optimizer_;
};

/**
 * @brief Trains a circuit's output distribution towards a target.
 *
 * Required keys: "ansatz", "target_dist" (real list of length 2^n), "accelerator" and
 * "optimizer". "loss" must be "js" and "gradient" "js-parameter-shift" (both defaults).
 * A target that does not sum to 1 is normalized with a warning on stderr. The circuit
 * distribution comes from counts when the accelerator samples and from exact probabilities
 * otherwise. Writes "opt-val" (best loss), "opt-params" and "opt-evaluations".
 */
class Ddcl final : public Algorithm {
  public:
    [[nodiscard]] std::string name() const override { return "ddcl"; }
    [[nodiscard]] std::string description() const override {
        return "Data-driven circuit learning with a Jensen-Shannon loss.";
    }

    void initialize(const HetMap &parameters) override;
    void execute(const BufferPtr &buffer) const override;

  private:
    ir::CompositePtr ansatz_;
    std::vector<double> target_;
    AcceleratorPtr accelerator_;
    OptimizerPtr optimizer_;
};

/// Jensen-Shannon divergence with natural logarithms; throws LengthMismatch.
double jsDivergence(std::span<const double> p, std::span<const double> q);

/// Output distribution of a concrete circuit: counts if sampled, probabilities if exact.
std::vector<double> circuitDistribution(Accelerator &accelerator, const ir::Composite &circuit,
                                        std::size_t nQubits);

} // namespace qf
