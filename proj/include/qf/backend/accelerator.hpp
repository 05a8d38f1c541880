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

#include <cstddef>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qf/backend/buffer.hpp"
#include "qf/foundation/het_map.hpp"
#include "qf/foundation/registry.hpp"
#include "qf/ir/composite.hpp"

namespace qf {

/**
 * @brief A back end that runs concrete programs and records results into a buffer.
 *
 * Options arrive through updateConfiguration() and persist across executions. The batched
 * overload appends one child buffer per program, labelled with the program's name.
 */
class Accelerator : public Service {
  public:
    static constexpr std::string_view kServiceKind = "accelerator";

    /// Merges `options` into the current configuration.
    virtual void updateConfiguration(const HetMap &options);
    [[nodiscard]] const HetMap &configuration() const noexcept { return config_; }

    virtual void execute(const BufferPtr &buffer, const ir::Composite &program) = 0;
    virtual void execute(const BufferPtr &buffer, const std::vector<ir::CompositePtr> &programs);

    /// Coupled qubit pairs; empty means all-to-all.
    [[nodiscard]] virtual std::vector<std::pair<std::size_t, std::size_t>> connectivity() const {
        return {};
    }

  protected:
    HetMap config_;
};

using AcceleratorPtr = std::shared_ptr<Accelerator>;

/**
 * @brief Wraps another accelerator and post-processes what it writes.
 *
 * Decorators chain: the decorated accelerator may itself be a decorator.
 */
class AcceleratorDecorator : public Accelerator {
  public:
    static constexpr std::string_view kServiceKind = "decorator";

    void setDecorated(AcceleratorPtr inner) { inner_ = std::move(inner); }
    [[nodiscard]] const AcceleratorPtr &decorated() const noexcept { return inner_; }

    /// Keeps the options and forwards them to the decorated accelerator.
    void updateConfiguration(const HetMap &options) override;

    void execute(const BufferPtr &buffer, const ir::Composite &program) override;
    void execute(const BufferPtr &buffer, const std::vector<ir::CompositePtr> &programs) override;

    [[nodiscard]] std::vector<std::pair<std::size_t, std::size_t>> connectivity() const override;

  protected:
    /// Runs on every buffer the decorated accelerator filled (each child for batches).
    virtual void postProcess(QuantumBuffer &buffer) const = 0;

  private:
    [[nodiscard]] Accelerator &inner() const;

    AcceleratorPtr inner_;
};

class IdentityDecorator final : public AcceleratorDecorator {
  public:
    [[nodiscard]] std::string name() const override { return "identity"; }
    [[nodiscard]] std::string description() const override { return "Passes results through."; }

  protected:
    void postProcess(QuantumBuffer &) const override {}
};

/**
 * @brief Readout-error mitigation under independent per-qubit bit flips.
 *
 * Options "p01" (read 1 from 0) and "p10" (read 0 from 1), each a real shared by all qubits
 * or a per-qubit list. Sampled results are corrected by applying the inverse of each
 * measured qubit's 2x2 confusion matrix to the count distribution; the parity average of the
 * result is written to "exp-val". For one qubit this is
 * `(<Z>raw - (p10 - p01)) / (1 - p01 - p10)`. Exact-mode results carry no readout noise and
 * "exp-val" copies "exp-val-z". Throws DegenerateChannel when p01 + p10 >= 1.
 */
class ReadoutErrorDecorator final : public AcceleratorDecorator {
  public:
    [[nodiscard]] std::string name() const override { return "ro-error"; }
    [[nodiscard]] std::string description() const override {
        return "Corrects expectation values for known readout flip rates.";
    }

  protected:
    void postProcess(QuantumBuffer &buffer) const override;
};

/// Mitigated parity expectation over the bit positions in `sites`.
double mitigatedExpectation(const obs::Counts &counts, std::span<const std::size_t> sites,
                            std::span<const double> p01, std::span<const double> p10);

/// Shared option handling for concrete accelerators.
namespace detail {

/// Rejects symbolic or unexpanded programs and out-of-range qubits or classical bits.
void checkProgram(const ir::Composite &program, const QuantumBuffer &buffer);

} // namespace detail

} // namespace qf
