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


#include "qf/algorithm/optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace qf {

void Optimizer::setOptions(const HetMap &options) {
    HetMap merged = options_;
    merged.merge(options);
    if (merged.contains("nlopt-maxeval") && !options.contains("maxeval")) {
        merged.insert("maxeval", merged.at("nlopt-maxeval"));
    }
    if (merged.getOr<std::int64_t>("maxeval", 500) < 1) {
        fail(ErrorCode::BadOption, "\"maxeval\" must be at least 1");
    }
    if (merged.getOr<double>("ftol", 1e-6) < 0.0) {
        fail(ErrorCode::BadOption, "\"ftol\" must not be negative");
    }
    if (merged.getOr<double>("step", 0.05) <= 0.0) {
        fail(ErrorCode::BadOption, "\"step\" must be positive");
    }
    options_ = std::move(merged);
}

Optimizer::Settings Optimizer::settings(std::size_t dimension) const {
    Settings s{options_.getOr<std::int64_t>("maxeval", 500), options_.getOr<double>("ftol", 1e-6),
               options_.getOr<std::vector<double>>("initial-parameters",
                                                   std::vector<double>(dimension, 0.0))};
    if (s.start.size() != dimension) {
        fail(ErrorCode::BadOption, "\"initial-parameters\" has " + std::to_string(s.start.size()) +
                                       " entries, the objective takes " +
                                       std::to_string(dimension));
    }
    return s;
}

OptResult NelderMead::optimize(const OptFunction &f) const {
    const auto [maxeval, ftol, start] = settings(f.dimension);
    const std::size_t n = f.dimension;
    const double size = options_.getOr<double>("simplex-size", 0.5);

    OptResult result;
    std::vector<double> noGradient;
    auto eval = [&](const std::vector<double> &x) {
        ++result.evaluations;
        const double v = f(x, noGradient);
        if (result.evaluations == 1 || v < result.value) {
            result.value = v;
            result.parameters = x;
        }
        return v;
    };
    auto budgetLeft = [&] { return result.evaluations < maxeval; };

    std::vector<std::vector<double>> simplex{start};
    std::vector<double> values{eval(start)};
    for (std::size_t i = 0; i < n && budgetLeft(); ++i) {
        auto vertex = start;
        vertex[i] += size;
        simplex.push_back(vertex);
        values.push_back(eval(vertex));
    }
    if (simplex.size() < n + 1) {
        return result;
    }

    auto combine = [&](const std::vector<double> &a, const std::vector<double> &b, double t) {
        std::vector<double> out(n);
        for (std::size_t i = 0; i < n; ++i) {
            out[i] = a[i] + t * (b[i] - a[i]);
        }
        return out;
    };

    std::vector<std::size_t> order(n + 1);
    while (true) {
        std::iota(order.begin(), order.end(), 0);
        std::sort(order.begin(), order.end(),
                  [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
        const std::size_t best = order.front();
        const std::size_t worst = order.back();
        const std::size_t second = order[n - 1];
        if (values[worst] - values[best] < ftol) {
            result.converged = true;
            return result;
        }
        if (!budgetLeft()) {
            return result;
        }

        std::vector<double> centroid(n, 0.0);
        for (std::size_t k = 0; k <= n; ++k) {
            if (k == worst) {
                continue;
            }
            for (std::size_t i = 0; i < n; ++i) {
                centroid[i] += simplex[k][i] / static_cast<double>(n);
            }
        }

        const auto reflected = combine(centroid, simplex[worst], -1.0);
        const double fr = eval(reflected);
        if (fr < values[best]) {
            if (!budgetLeft()) {
                simplex[worst] = reflected;
                values[worst] = fr;
                continue;
            }
            const auto expanded = combine(centroid, simplex[worst], -2.0);
            const double fe = eval(expanded);
            if (fe < fr) {
                simplex[worst] = expanded;
                values[worst] = fe;
            } else {
                simplex[worst] = reflected;
                values[worst] = fr;
            }
            continue;
        }
        if (fr < values[second]) {
            simplex[worst] = reflected;
            values[worst] = fr;
            continue;
        }
        if (!budgetLeft()) {
            continue;
        }
        // contraction towards the better of the worst and reflected points
        const bool outside = fr < values[worst];
        const auto contracted =
            outside ? combine(centroid, reflected, 0.5) : combine(centroid, simplex[worst], 0.5);
        const double fc = eval(contracted);
        if (fc < std::min(fr, values[worst])) {
            simplex[worst] = contracted;
            values[worst] = fc;
            continue;
        }
        for (std::size_t k = 0; k <= n && budgetLeft(); ++k) {
            if (k == best) {
                continue;
            }
            simplex[k] = combine(simplex[best], simplex[k], 0.5);
            values[k] = eval(simplex[k]);
        }
    }
}

OptResult GradientDescent::optimize(const OptFunction &f) const {
    auto [maxeval, ftol, x] = settings(f.dimension);
    const double step = options_.getOr<double>("step", 0.05);

    OptResult result;
    std::vector<double> grad(f.dimension, 0.0);
    while (result.evaluations < maxeval) {
        std::fill(grad.begin(), grad.end(), 0.0);
        const double v = f(x, grad);
        ++result.evaluations;
        if (result.evaluations == 1 || v < result.value) {
            result.value = v;
            result.parameters = x;
        }
        double norm = 0.0;
        for (double g : grad) {
            norm += g * g;
        }
        if (std::sqrt(norm) < ftol) {
            result.converged = true;
            break;
        }
        for (std::size_t i = 0; i < x.size(); ++i) {
            x[i] -= step * grad[i];
        }
    }
    return result;
}

} // namespace qf
