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


#include "qf/algorithm/gradients.hpp"

#include <algorithm>
#include <map>
#include <numbers>
#include <string>

namespace qf {

namespace {

constexpr double kShift = std::numbers::pi / 2;

} // namespace

std::vector<double> parameterShiftGradient(const ScalarFunction &f, std::span<const double> x) {
    std::vector<double> grad(x.size());
    std::vector<double> probe(x.begin(), x.end());
    for (std::size_t i = 0; i < x.size(); ++i) {
        probe[i] = x[i] + kShift;
        const double plus = f(probe);
        probe[i] = x[i] - kShift;
        const double minus = f(probe);
        probe[i] = x[i];
        grad[i] = 0.5 * (plus - minus);
    }
    return grad;
}

std::vector<double> finiteDifferenceGradient(const ScalarFunction &f, std::span<const double> x,
                                             double h) {
    std::vector<double> grad(x.size());
    std::vector<double> probe(x.begin(), x.end());
    for (std::size_t i = 0; i < x.size(); ++i) {
        probe[i] = x[i] + h;
        const double plus = f(probe);
        probe[i] = x[i] - h;
        const double minus = f(probe);
        probe[i] = x[i];
        grad[i] = (plus - minus) / (2 * h);
    }
    return grad;
}

std::vector<std::vector<double>> parameterShiftJacobian(const ir::Composite &ansatz,
                                                        std::span<const double> x,
                                                        const CircuitEvaluator &f) {
    const auto &variables = ansatz.variables();
    if (variables.size() != x.size()) {
        fail(ErrorCode::ArityMismatch, ansatz.name() + " takes " +
                                           std::to_string(variables.size()) + " parameters, got " +
                                           std::to_string(x.size()));
    }
    std::map<std::string, std::size_t, std::less<>> index;
    for (std::size_t i = 0; i < variables.size(); ++i) {
        index.emplace(variables[i], i);
    }
    const ir::VariableLookup lookup = [&](std::string_view name) -> std::optional<double> {
        auto it = index.find(name);
        if (it == index.end()) {
            return std::nullopt;
        }
        return x[it->second];
    };

    const auto symbolic = ansatz.instructions();
    std::vector<ir::Instruction> concrete;
    concrete.reserve(symbolic.size());
    for (const auto &inst : symbolic) {
        concrete.push_back(inst.evaluate(lookup));
    }
    auto build = [&](const std::vector<ir::Instruction> &insts) {
        ir::Composite c(ansatz.name());
        c.addInstructions(insts);
        return c;
    };

    std::vector<std::vector<double>> jacobian(x.size());
    for (std::size_t k = 0; k < symbolic.size(); ++k) {
        const auto &params = symbolic[k].params();
        for (std::size_t p = 0; p < params.size(); ++p) {
            const auto *expr = std::get_if<ir::ParamExpr>(&params[p]);
            if (expr == nullptr || expr->variable.empty()) {
                continue;
            }
            const std::size_t var = index.at(expr->variable);
            const double angle = expr->evaluate(x[var]);
            auto shifted = concrete;
            shifted[k].setParam(p, angle + kShift);
            const auto plus = f(build(shifted));
            shifted[k].setParam(p, angle - kShift);
            const auto minus = f(build(shifted));
            auto &row = jacobian[var];
            row.resize(plus.size(), 0.0);
            for (std::size_t j = 0; j < plus.size(); ++j) {
                row[j] += expr->scale * 0.5 * (plus[j] - minus[j]);
            }
        }
    }
    // parameters the circuit never uses get zero rows of the right width
    std::size_t width = 0;
    for (const auto &row : jacobian) {
        width = std::max(width, row.size());
    }
    if (width == 0) {
        width = f(build(concrete)).size();
    }
    for (auto &row : jacobian) {
        row.resize(width, 0.0);
    }
    return jacobian;
}

} // namespace qf
