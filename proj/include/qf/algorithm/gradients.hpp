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

#include <functional>
#include <span>
#include <vector>

#include "qf/ir/composite.hpp"

namespace qf {

using ScalarFunction = std::function<double(const std::vector<double> &)>;

/// Maps a concrete circuit to the quantities being differentiated (an energy, a distribution).
using CircuitEvaluator = std::function<std::vector<double>(const ir::Composite &)>;

/**
 * Two-sided shift rule at the parameter level:
 * `df/dx_i = (f(x + pi/2 e_i) - f(x - pi/2 e_i)) / 2`.
 * Exact when each parameter drives one rotation gate with unit scale.
 */
std::vector<double> parameterShiftGradient(const ScalarFunction &f, std::span<const double> x);

/// Central differences with step `h`.
std::vector<double> finiteDifferenceGradient(const ScalarFunction &f, std::span<const double> x,
                                             double h = 1e-5);

/**
 * Shift rule applied gate by gate, so parameters may appear in several gates and through
 * affine expressions such as `0.5*theta`. Every catalog rotation (Rx, Ry, Rz, CPhase and each
 * angle of U) has a generator with eigenvalue gap 1, so each occurrence contributes
 * `scale * (f(angle + pi/2) - f(angle - pi/2)) / 2`.
 *
 * Returns one row per ansatz variable, each as long as the evaluator's output.
 */
std::vector<std::vector<double>> parameterShiftJacobian(const ir::Composite &ansatz,
                                                        std::span<const double> x,
                                                        const CircuitEvaluator &f);

} // namespace qf
