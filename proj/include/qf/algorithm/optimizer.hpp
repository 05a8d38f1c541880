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

#include <cstdint>
#include <functional>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "qf/foundation/het_map.hpp"
#include "qf/foundation/registry.hpp"

namespace qf {

/**
 * @brief Objective handed to an optimizer.
 *
 * The callable receives the parameters and a gradient buffer. The buffer is empty when the
 * optimizer does not want a gradient; otherwise it has `dimension` entries to fill.
 */
struct OptFunction {
    using Callable = std::function<double(const std::vector<double> &, std::vector<double> &)>;

    Callable function;
    std::size_t dimension = 0;

    double operator()(const std::vector<double> &x, std::vector<double> &grad) const {
        return function(x, grad);
    }
};

struct OptResult {
    double value = 0.0;
    std::vector<double> parameters;
    std::int64_t evaluations = 0;
    bool converged = false;
};

/**
 * @brief Minimizer of an OptFunction.
 *
 * Options: "maxeval" (default 500), "ftol" (1e-6), "initial-parameters" (zeros) and, for
 * gradient descent, "step" (0.05). "nlopt-maxeval" is read as "maxeval"; "nlopt-optimizer"
 * is accepted and only consulted by getOptimizer("nlopt").
 */
class Optimizer : public Service {
  public:
    static constexpr std::string_view kServiceKind = "optimizer";

    /// Merges options; throws BadOption on out-of-range values.
    void setOptions(const HetMap &options);
    [[nodiscard]] const HetMap &options() const noexcept { return options_; }

    [[nodiscard]] virtual OptResult optimize(const OptFunction &f) const = 0;

  protected:
    struct Settings {
        std::int64_t maxeval;
        double ftol;
        std::vector<double> start;
    };
    [[nodiscard]] Settings settings(std::size_t dimension) const;

    HetMap options_;
};

using OptimizerPtr = std::shared_ptr<Optimizer>;

/// Nelder-Mead simplex search with reflection 1, expansion 2, contraction 1/2 and shrink 1/2.
/// "simplex-size" (default 0.5) sets the initial edge length. Converges when the spread of
/// objective values over the simplex drops below ftol.
class NelderMead final : public Optimizer {
  public:
    [[nodiscard]] std::string name() const override { return "neldermead"; }
    [[nodiscard]] std::string description() const override {
        return "Derivative-free simplex minimization.";
    }
    [[nodiscard]] OptResult optimize(const OptFunction &f) const override;
};

/// Fixed-step gradient descent. Each evaluation requests a gradient from the objective;
/// converges when its Euclidean norm drops below ftol.
class GradientDescent final : public Optimizer {
  public:
    [[nodiscard]] std::string name() const override { return "gd-paramshift"; }
    [[nodiscard]] std::string description() const override {
        return "Gradient descent driven by parameter-shift gradients.";
    }
    [[nodiscard]] OptResult optimize(const OptFunction &f) const override;
};

} // namespace qf
