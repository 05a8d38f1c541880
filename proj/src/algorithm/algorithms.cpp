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


#include <algorithm>
#include <cmath>
#include <iostream>
#include <numeric>

#include "qf/algorithm/algorithm.hpp"
#include "qf/algorithm/gradients.hpp"
#include "qf/observable/fermion.hpp"
#include "qf/observable/pauli.hpp"

namespace qf {

namespace {

void require(const HetMap &parameters, std::string_view key) {
    if (!parameters.contains(key)) {
        fail(ErrorCode::InitializationError, std::string(key));
    }
}

// Observables may be stored through their interface or their concrete type.
obs::ObservablePtr observableFrom(const HetMap &parameters) {
    const auto handle = parameters.get<Handle>("observable");
    if (auto o = handle.as<obs::Observable>()) {
        return o;
    }
    if (auto p = handle.as<obs::PauliOperator>()) {
        return p;
    }
    if (auto f = handle.as<obs::FermionOperator>()) {
        return f;
    }
    fail(ErrorCode::VariantMismatch, "observable does not hold an observable handle");
}

template <class T> std::shared_ptr<T> required(const HetMap &parameters, std::string_view key) {
    require(parameters, key);
    return parameters.getHandle<T>(key);
}

double termValue(const QuantumBuffer &buffer) {
    return buffer.metadata().contains("exp-val") ? buffer.metadata().get<double>("exp-val")
                                                 : buffer.getExpectationValueZ();
}

} // namespace

// ---------------------------------------------------------------------------- VQE

void Vqe::initialize(const HetMap &parameters) {
    auto ansatz = required<ir::Composite>(parameters, "ansatz");
    require(parameters, "observable");
    auto observable = observableFrom(parameters);
    auto accelerator = required<Accelerator>(parameters, "accelerator");
    auto optimizer = required<Optimizer>(parameters, "optimizer");
    ansatz_ = std::move(ansatz);
    observable_ = std::move(observable);
    accelerator_ = std::move(accelerator);
    optimizer_ = std::move(optimizer);
}

void Vqe::execute(const BufferPtr &buffer) const {
    if (!ansatz_) {
        fail(ErrorCode::InitializationError, "ansatz");
    }
    const double offset = observable_->constantTerm();

    // Energy of a concrete circuit; recorded evaluations become children of `buffer`.
    auto energy = [&](const ir::Composite &circuit, const std::vector<double> *record) {
        const auto programs = observable_->observe(circuit);
        if (programs.empty()) {
            return offset;
        }
        auto scratch = std::make_shared<QuantumBuffer>(buffer->size(), buffer->name());
        accelerator_->execute(scratch, programs);
        double e = offset;
        for (std::size_t k = 0; k < programs.size(); ++k) {
            const auto &child = scratch->children().at(k).second;
            const double value = termValue(*child);
            e += programs[k]->metadata().get<double>("coefficient") * value;
            if (record != nullptr) {
                const auto term = programs[k]->metadata().get<std::string>("term");
                child->metadata().insert("parameters", *record);
                child->metadata().insert("term", term);
                child->metadata().insert("exp-val", value);
                buffer->appendChild(term, child);
            }
        }
        return e;
    };

    OptFunction objective{
        [&](const std::vector<double> &x, std::vector<double> &grad) {
            const double e = energy(ansatz_->evaluate(x), &x);
            if (!grad.empty()) {
                const auto jacobian =
                    parameterShiftJacobian(*ansatz_, x, [&](const ir::Composite &c) {
                        return std::vector<double>{energy(c, nullptr)};
                    });
                for (std::size_t i = 0; i < grad.size(); ++i) {
                    grad[i] = jacobian[i].at(0);
                }
            }
            return e;
        },
        ansatz_->variables().size()};

    const auto result = optimizer_->optimize(objective);
    buffer->metadata().insert("opt-val", result.value);
    buffer->metadata().insert("opt-params", result.parameters);
    buffer->metadata().insert("opt-evaluations", result.evaluations);
}

// ---------------------------------------------------------------------------- DDCL

double jsDivergence(std::span<const double> p, std::span<const double> q) {
    if (p.size() != q.size()) {
        fail(ErrorCode::LengthMismatch, "distributions of length " + std::to_string(p.size()) +
                                            " and " + std::to_string(q.size()));
    }
    double js = 0.0;
    for (std::size_t i = 0; i < p.size(); ++i) {
        const double m = 0.5 * (p[i] + q[i]);
        if (p[i] > 0.0) {
            js += 0.5 * p[i] * std::log(p[i] / m);
        }
        if (q[i] > 0.0) {
            js += 0.5 * q[i] * std::log(q[i] / m);
        }
    }
    return js;
}

std::vector<double> circuitDistribution(Accelerator &accelerator, const ir::Composite &circuit,
                                        std::size_t nQubits) {
    auto scratch = std::make_shared<QuantumBuffer>(nQubits);
    accelerator.execute(scratch, circuit);
    if (!scratch->counts().empty()) {
        return scratch->distribution();
    }
    if (scratch->metadata().contains("probabilities")) {
        return scratch->metadata().get<std::vector<double>>("probabilities");
    }
    fail(ErrorCode::EmptyBuffer, "accelerator produced neither counts nor probabilities");
}

void Ddcl::initialize(const HetMap &parameters) {
    auto ansatz = required<ir::Composite>(parameters, "ansatz");
    require(parameters, "target_dist");
    auto target = parameters.get<std::vector<double>>("target_dist");
    auto accelerator = required<Accelerator>(parameters, "accelerator");
    auto optimizer = required<Optimizer>(parameters, "optimizer");
    if (const auto loss = parameters.getOr<std::string>("loss", "js"); loss != "js") {
        fail(ErrorCode::BadOption, "unsupported loss \"" + loss + "\"");
    }
    if (const auto gradient = parameters.getOr<std::string>("gradient", "js-parameter-shift");
        gradient != "js-parameter-shift") {
        fail(ErrorCode::BadOption, "unsupported gradient \"" + gradient + "\"");
    }
    if (std::any_of(target.begin(), target.end(), [](double v) { return v < 0.0; })) {
        fail(ErrorCode::BadOption, "target_dist has a negative entry");
    }
    const double total = std::accumulate(target.begin(), target.end(), 0.0);
    if (total <= 0.0) {
        fail(ErrorCode::BadOption, "target_dist sums to zero");
    }
    if (std::abs(total - 1.0) > 1e-9) {
        std::cerr << "warning: target_dist sums to " << total << "; normalizing\n";
        for (auto &v : target) {
            v /= total;
        }
    }
    ansatz_ = std::move(ansatz);
    target_ = std::move(target);
    accelerator_ = std::move(accelerator);
    optimizer_ = std::move(optimizer);
}

void Ddcl::execute(const BufferPtr &buffer) const {
    if (!ansatz_) {
        fail(ErrorCode::InitializationError, "ansatz");
    }
    const std::size_t n = buffer->size();
    if (n >= 63 || target_.size() != (std::size_t{1} << n)) {
        fail(ErrorCode::DistributionLengthMismatch,
             "target_dist has " + std::to_string(target_.size()) + " entries for " +
                 std::to_string(n) + " qubits");
    }
    auto distribution = [&](const ir::Composite &c) {
        return circuitDistribution(*accelerator_, c, n);
    };

    OptFunction objective{
        [&](const std::vector<double> &x, std::vector<double> &grad) {
            const auto p = distribution(ansatz_->evaluate(x));
            const double loss = jsDivergence(p, target_);
            if (!grad.empty()) {
                // dJS/dp_i = ln(p_i / m_i) / 2; outcomes with p_i = 0 sit at a minimum of
                // p_i(x) and contribute nothing
                const auto jacobian = parameterShiftJacobian(*ansatz_, x, distribution);
                for (std::size_t k = 0; k < grad.size(); ++k) {
                    double g = 0.0;
                    for (std::size_t i = 0; i < p.size(); ++i) {
                        if (p[i] > 0.0) {
                            g += 0.5 * std::log(2 * p[i] / (p[i] + target_[i])) * jacobian[k][i];
                        }
                    }
                    grad[k] = g;
                }
            }
            return loss;
        },
        ansatz_->variables().size()};

    const auto result = optimizer_->optimize(objective);
    buffer->metadata().insert("opt-val", result.value);
    buffer->metadata().insert("opt-params", result.parameters);
    buffer->metadata().insert("opt-evaluations", result.evaluations);
}

} // namespace qf
