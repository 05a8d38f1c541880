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


#include <catch_amalgamated.hpp>
#include <cmath>
#include <numbers>
#include <random>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "programs.hpp"
#include "qf/qf.hpp"

using namespace qf;
using ir::createInstruction;
using Catch::Matchers::WithinAbs;

namespace {

template <class F> ErrorCode codeOf(F &&f) {
    try {
        f();
    } catch (const Error &e) {
        return e.code();
    }
    FAIL("expected an exception");
    return ErrorCode::KeyMissing;
}

template <class F> std::string detailOf(F &&f) {
    try {
        f();
    } catch (const Error &e) {
        return e.detail();
    }
    return {};
}

struct Framework {
    Framework() {
        if (!isInitialized()) {
            initialize();
        }
    }
    ~Framework() { finalize(); }
};

ir::CompositePtr ryAnsatz() {
    auto c = std::make_shared<ir::Composite>("ry", std::vector<std::string>{"theta"});
    c->addInstruction(createInstruction("Ry", {0}, {ir::ParamExpr::symbol("theta")}));
    return c;
}

// Dense oracle energy <psi(x)|H|psi(x)> for a Pauli sum given as (sites, weight) pairs.
double oracleEnergy(const ir::Composite &ansatz, const std::vector<double> &x,
                    const std::vector<std::pair<std::map<std::size_t, char>, double>> &terms,
                    std::size_t n) {
    const auto u = oracle::circuitUnitary(ansatz.evaluate(x), n);
    const oracle::Vec psi = u.col(0);
    double e = 0.0;
    for (const auto &[sites, w] : terms) {
        e += w * (psi.adjoint() * oracle::pauliString(sites, n) * psi)(0, 0).real();
    }
    return e;
}

} // namespace

TEST_CASE("Nelder-Mead minimizes a quadratic", "[algorithm][optimizer]") {
    Framework fw;
    auto nm = getOptimizer("neldermead");
    std::vector<double> history;
    OptFunction f{[&](const std::vector<double> &x, std::vector<double> &) {
                      const double v = (x[0] - 2) * (x[0] - 2);
                      history.push_back(v);
                      return v;
                  },
                  1};
    auto result = nm->optimize(f);
    CHECK_THAT(result.parameters.at(0), WithinAbs(2.0, 1e-4));
    CHECK(result.converged);
    CHECK(result.evaluations == static_cast<std::int64_t>(history.size()));
    CHECK(result.value == *std::min_element(history.begin(), history.end()));

    // best-so-far never increases
    double best = history.front();
    for (double v : history) {
        CHECK(std::min(best, v) <= best);
        best = std::min(best, v);
    }

    OptFunction rosen{[](const std::vector<double> &x, std::vector<double> &) {
                          return 100 * std::pow(x[1] - x[0] * x[0], 2) + std::pow(1 - x[0], 2);
                      },
                      2};
    auto r = getOptimizer("neldermead", {{"maxeval", 2000}, {"ftol", 1e-12}})->optimize(rosen);
    CHECK_THAT(r.parameters[0], WithinAbs(1.0, 1e-3));
    CHECK_THAT(r.parameters[1], WithinAbs(1.0, 1e-3));
}

TEST_CASE("Optimizer options", "[algorithm][optimizer]") {
    Framework fw;
    OptFunction f{[](const std::vector<double> &x, std::vector<double> &) { return x[0] * x[0]; },
                  1};
    auto once = getOptimizer("neldermead", {{"maxeval", 1}})->optimize(f);
    CHECK(once.evaluations == 1);
    CHECK_FALSE(once.converged);
    auto alias = getOptimizer("neldermead", {{"nlopt-maxeval", 1}})->optimize(f);
    CHECK(alias.evaluations == 1);
    auto gdOnce = getOptimizer("gd-paramshift", {{"maxeval", 1},
                                                 {"initial-parameters", std::vector<double>{1.0}}});
    CHECK(gdOnce->optimize(OptFunction{[](const std::vector<double> &x, std::vector<double> &g) {
                                           g[0] = 2 * x[0];
                                           return x[0] * x[0];
                                       },
                                       1})
              .evaluations == 1);

    CHECK(getOptimizer("nlopt", {{"nlopt-optimizer", "nelder-mead"}})->name() == "neldermead");
    CHECK(codeOf([] { (void)getOptimizer("nope"); }) == ErrorCode::ServiceNotFound);
    CHECK(codeOf([] { (void)getOptimizer("neldermead", {{"maxeval", 0}}); }) == ErrorCode::BadOption);
    auto wrongStart =
        getOptimizer("neldermead", {{"initial-parameters", std::vector<double>{1.0, 2.0}}});
    CHECK(codeOf([&] { (void)wrongStart->optimize(f); }) == ErrorCode::BadOption);
}

TEST_CASE("Gradient descent on the sweep circuit", "[algorithm][optimizer]") {
    Framework fw;
    // <Z0> of X(0), Ry(1, t), CX(1, 0) is -cos t
    ir::Composite sweep("sweep", {"t"});
    sweep.addInstructions({createInstruction("X", {0}),
                           createInstruction("Ry", {1}, {ir::ParamExpr::symbol("t")}),
                           createInstruction("CX", {1, 0}), createInstruction("Measure", {0})});
    auto sim = getAccelerator("sim");
    auto expectation = [&](const ir::Composite &c) {
        auto b = qalloc(2);
        sim->execute(b, c);
        return std::vector<double>{b->getExpectationValueZ()};
    };
    OptFunction f{[&](const std::vector<double> &x, std::vector<double> &grad) {
                      if (!grad.empty()) {
                          grad[0] = parameterShiftJacobian(sweep, x, expectation)[0][0];
                      }
                      return expectation(sweep.evaluate(x))[0];
                  },
                  1};
    auto result =
        getOptimizer("gd-paramshift", {{"initial-parameters", std::vector<double>{2.5}}, {"step", 0.5}})
            ->optimize(f);
    CHECK(result.converged);
    CHECK_THAT(result.value, WithinAbs(-1.0, 1e-9));
    CHECK_THAT(std::remainder(result.parameters[0], 2 * std::numbers::pi), WithinAbs(0.0, 1e-4));
}

TEST_CASE("Parameter-shift gradients", "[algorithm][gradient]") {
    Framework fw;
    auto sim = getAccelerator("sim");
    auto zOfRy = [&](const std::vector<double> &x) {
        auto b = qalloc(1);
        sim->execute(b, ryAnsatz()->evaluate(x));
        return b->getExpectationValueZ();
    };
    const std::vector<double> at{0.4};
    CHECK_THAT(parameterShiftGradient(zOfRy, at)[0], WithinAbs(-std::sin(0.4), 1e-9));
    CHECK_THAT(finiteDifferenceGradient(zOfRy, at)[0], WithinAbs(-std::sin(0.4), 1e-8));

    ir::Composite flat("flat", {"u"});
    flat.addInstruction(createInstruction("H", {0}));
    auto constant = parameterShiftJacobian(flat, std::vector<double>{0.3},
                                           [](const ir::Composite &) { return std::vector<double>{1.0}; });
    CHECK(constant == std::vector<std::vector<double>>{{0.0}});
    CHECK(codeOf([&] {
              (void)parameterShiftJacobian(flat, std::vector<double>{},
                                           [](const ir::Composite &) { return std::vector<double>{}; });
          }) == ErrorCode::ArityMismatch);
}

TEST_CASE("Gate-level shift rule agrees with finite differences", "[algorithm][gradient]") {
    std::mt19937_64 rng(41);
    std::uniform_real_distribution<double> angle(-std::numbers::pi, std::numbers::pi);
    std::uniform_real_distribution<double> weight(-1.0, 1.0);
    const char paulis[] = {'X', 'Y', 'Z'};
    for (int trial = 0; trial < 20; ++trial) {
        const auto ansatz = fixtures::randomAnsatz(rng);
        std::vector<std::pair<std::map<std::size_t, char>, double>> terms;
        for (int t = 0; t < 3; ++t) {
            std::map<std::size_t, char> sites;
            sites[t % 3] = paulis[rng() % 3];
            sites[(t + 1) % 3] = paulis[rng() % 3];
            terms.emplace_back(sites, weight(rng));
        }
        std::vector<double> x(4);
        for (auto &v : x) {
            v = angle(rng);
        }
        const auto shift = parameterShiftJacobian(ansatz, x, [&](const ir::Composite &c) {
            const auto u = oracle::circuitUnitary(c, 3);
            const oracle::Vec psi = u.col(0);
            double e = 0.0;
            for (const auto &[sites, w] : terms) {
                e += w * (psi.adjoint() * oracle::pauliString(sites, 3) * psi)(0, 0).real();
            }
            return std::vector<double>{e};
        });
        // oracle: central difference of the dense energy, h = 1e-5
        for (std::size_t i = 0; i < 4; ++i) {
            auto up = x;
            auto down = x;
            up[i] += 1e-5;
            down[i] -= 1e-5;
            const double fd =
                (oracleEnergy(ansatz, up, terms, 3) - oracleEnergy(ansatz, down, terms, 3)) / 2e-5;
            INFO("trial " << trial << " parameter " << i);
            CHECK(std::abs(shift[i][0] - fd) < 1e-5);
        }
    }
}

TEST_CASE("VQE on small observables", "[algorithm][vqe]") {
    Framework fw;
    auto vqe = getAlgorithm("vqe");
    vqe->initialize({{"ansatz", ryAnsatz()},
                     {"observable", getObservable("pauli", "Z0")},
                     {"accelerator", getAccelerator("sim")},
                     {"optimizer", getOptimizer("neldermead")}});
    auto buffer = qalloc(1);
    vqe->execute(buffer);
    CHECK_THAT(buffer->metadata().get<double>("opt-val"), WithinAbs(-1.0, 1e-6));
    const auto theta = buffer->metadata().get<std::vector<double>>("opt-params").at(0);
    CHECK_THAT(std::cos(theta), WithinAbs(-1.0, 1e-6));

    // two terms: children come in groups of two, each tagged with its evaluation point
    auto two = getAlgorithm("vqe");
    two->initialize({{"ansatz", ryAnsatz()},
                     {"observable", getObservable("pauli", "X0 + Z0")},
                     {"accelerator", getAccelerator("sim")},
                     {"optimizer", getOptimizer("neldermead", {{"maxeval", 60}})}});
    auto b2 = qalloc(1);
    two->execute(b2);
    CHECK_THAT(b2->metadata().get<double>("opt-val"), WithinAbs(-std::sqrt(2.0), 1e-5));
    const auto &children = b2->children();
    REQUIRE(children.size() % 2 == 0);
    CHECK(children.size() / 2 <= 60);
    for (std::size_t k = 0; k < children.size(); k += 2) {
        const auto &m0 = children[k].second->metadata();
        const auto &m1 = children[k + 1].second->metadata();
        CHECK(m0.get<std::string>("term") != m1.get<std::string>("term"));
        CHECK(m0.get<std::vector<double>>("parameters") == m1.get<std::vector<double>>("parameters"));
        const double t = m0.get<std::vector<double>>("parameters")[0];
        const double ev = m0.get<std::string>("term") == "X0" ? std::sin(t) : std::cos(t);
        CHECK_THAT(m0.get<double>("exp-val"), WithinAbs(ev, 1e-9));
    }
}

TEST_CASE("VQE with gradient descent", "[algorithm][vqe]") {
    Framework fw;
    auto vqe = getAlgorithm("vqe");
    vqe->initialize(
        {{"ansatz", ryAnsatz()},
         {"observable", getObservable("pauli", "Z0")},
         {"accelerator", getAccelerator("sim")},
         {"optimizer",
          getOptimizer("gd-paramshift", {{"initial-parameters", std::vector<double>{0.3}},
                                         {"step", 0.5}})}});
    auto b = qalloc(1);
    vqe->execute(b);
    CHECK_THAT(b->metadata().get<double>("opt-val"), WithinAbs(-1.0, 1e-9));
}

TEST_CASE("Deuteron VQE reaches the ground state", "[algorithm][vqe]") {
    Framework fw;
    qasm(fixtures::kDeuteronAnsatz);
    const auto h3 = obs::PauliOperator::parse(fixtures::kDeuteronH3);

    // dense oracle: eigenvalues of the explicitly assembled 8x8 matrix
    oracle::Mat h = oracle::Mat::Zero(8, 8);
    for (const auto &[term, coefficient] : h3.terms()) {
        std::map<std::size_t, char> sites(term.ops.begin(), term.ops.end());
        h += coefficient * oracle::pauliString(sites, 3);
    }
    const double lambda = oracle::minEigenvalue(h);

    auto vqe = getAlgorithm("vqe");
    vqe->initialize({{"ansatz", getCompiled("deuteron_ansatz")},
                     {"observable", getObservable("pauli", fixtures::kDeuteronH3)},
                     {"accelerator", getAccelerator("sim")},
                     {"optimizer", getOptimizer("nlopt")}});
    auto buffer = qalloc(3);
    vqe->execute(buffer);
    CHECK_THAT(buffer->metadata().get<double>("opt-val"), WithinAbs(lambda, 1e-3));

    // variational bound on every recorded evaluation
    const std::size_t k = h3.nTerms() - 1;
    REQUIRE(buffer->children().size() % k == 0);
    for (std::size_t start = 0; start < buffer->children().size(); start += k) {
        double e = h3.constantTerm();
        for (std::size_t j = 0; j < k; ++j) {
            const auto &m = buffer->children()[start + j].second->metadata();
            for (const auto &[t, c] : h3.terms()) {
                if (t.key() == m.get<std::string>("term")) {
                    e += c.real() * m.get<double>("exp-val");
                }
            }
        }
        CHECK(e >= lambda - 1e-9);
    }
}

TEST_CASE("Algorithm initialization contract", "[algorithm]") {
    Framework fw;
    auto vqe = getAlgorithm("vqe");
    const HetMap partial{{"ansatz", ryAnsatz()},
                         {"observable", getObservable("pauli", "Z0")},
                         {"accelerator", getAccelerator("sim")}};
    CHECK(codeOf([&] { vqe->initialize(partial); }) == ErrorCode::InitializationError);
    CHECK(detailOf([&] { vqe->initialize(partial); }) == "optimizer");
    CHECK(detailOf([&] { vqe->initialize({}); }) == "ansatz");
    CHECK(codeOf([&] { vqe->execute(qalloc(1)); }) == ErrorCode::InitializationError);
    CHECK(codeOf([] { (void)getAlgorithm("qaoa"); }) == ErrorCode::ServiceNotFound);

    // a concrete observable type is accepted as well
    auto withPauli = getAlgorithm("vqe");
    CHECK_NOTHROW(withPauli->initialize(
        {{"ansatz", ryAnsatz()},
         {"observable", std::make_shared<obs::PauliOperator>(obs::PauliOperator::parse("Z0"))},
         {"accelerator", getAccelerator("sim")},
         {"optimizer", getOptimizer("neldermead")}}));
}

TEST_CASE("Jensen-Shannon divergence", "[algorithm][ddcl]") {
    const std::vector<double> a{0.5, 0.5};
    const std::vector<double> e0{1.0, 0.0};
    const std::vector<double> e1{0.0, 1.0};
    CHECK(jsDivergence(a, a) == 0.0);
    CHECK_THAT(jsDivergence(e0, e1), WithinAbs(std::log(2.0), 1e-15));

    // direct evaluation of both KL terms against m = (3/4, 1/4)
    const double klp = 0.5 * std::log(0.5 / 0.75) + 0.5 * std::log(0.5 / 0.25);
    const double klq = std::log(1.0 / 0.75);
    CHECK_THAT(jsDivergence(a, e0), WithinAbs(0.5 * klp + 0.5 * klq, 1e-15));
    CHECK_THAT(jsDivergence(a, e0), WithinAbs(0.2158, 1e-3));

    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<double> p(4), q(4);
        double sp = 0, sq = 0;
        for (int i = 0; i < 4; ++i) {
            p[i] = u(rng);
            q[i] = u(rng);
            sp += p[i];
            sq += q[i];
        }
        for (int i = 0; i < 4; ++i) {
            p[i] /= sp;
            q[i] /= sq;
        }
        const double js = jsDivergence(p, q);
        CHECK(js >= 0.0);
        CHECK(js <= std::log(2.0));
        CHECK_THAT(js - jsDivergence(q, p), WithinAbs(0.0, 1e-12));
    }
    CHECK(codeOf([&] { (void)jsDivergence(a, std::vector<double>{1.0}); }) ==
          ErrorCode::LengthMismatch);
}

TEST_CASE("DDCL learns the uniform distribution", "[algorithm][ddcl]") {
    Framework fw;
    qasm(fixtures::kDdclAnsatz);
    const std::vector<double> start{0.3, -0.2, 0.4, 0.1, -0.3, 0.2, 0.5, -0.1};
    auto ddcl = getAlgorithm("ddcl");
    ddcl->initialize({{"ansatz", getCompiled("qubit2_depth1")},
                      {"target_dist", std::vector<double>{.5, .5, .5, .5}},
                      {"accelerator", getAccelerator("sim")},
                      {"loss", "js"},
                      {"gradient", "js-parameter-shift"},
                      {"optimizer", getOptimizer("gd-paramshift", {{"initial-parameters", start},
                                                                   {"step", 0.5}})}});
    auto buffer = qalloc(2);
    ddcl->execute(buffer);
    const double loss = buffer->metadata().get<double>("opt-val");
    CHECK(loss < 1e-3);

    // oracle: re-evaluate the loss at the reported parameters with dense simulation
    const auto params = buffer->metadata().get<std::vector<double>>("opt-params");
    const auto p = oracle::probabilities(
        oracle::circuitUnitary(getCompiled("qubit2_depth1")->evaluate(params), 2));
    CHECK_THAT(jsDivergence(p, std::vector<double>(4, 0.25)), WithinAbs(loss, 1e-9));
}

TEST_CASE("DDCL edge cases", "[algorithm][ddcl]") {
    Framework fw;
    qasm(fixtures::kDdclAnsatz);
    auto ansatz = getCompiled("qubit2_depth1");
    const std::vector<double> start{0.3, -0.2, 0.4, 0.1, -0.3, 0.2, 0.5, -0.1};
    const auto initial =
        oracle::probabilities(oracle::circuitUnitary(ansatz->evaluate(start), 2));

    auto already = getAlgorithm("ddcl");
    already->initialize({{"ansatz", ansatz},
                         {"target_dist", std::vector<double>(initial.begin(), initial.end())},
                         {"accelerator", getAccelerator("sim")},
                         {"optimizer", getOptimizer("gd-paramshift", {{"initial-parameters", start}})}});
    auto b = qalloc(2);
    already->execute(b);
    CHECK(b->metadata().get<double>("opt-val") < 1e-12);
    CHECK(b->metadata().get<std::vector<double>>("opt-params") == start);

    auto shortTarget = getAlgorithm("ddcl");
    shortTarget->initialize({{"ansatz", ansatz},
                             {"target_dist", std::vector<double>{0.2, 0.3, 0.5}},
                             {"accelerator", getAccelerator("sim")},
                             {"optimizer", getOptimizer("gd-paramshift")}});
    CHECK(codeOf([&] { shortTarget->execute(qalloc(2)); }) == ErrorCode::DistributionLengthMismatch);

    auto badLoss = getAlgorithm("ddcl");
    CHECK(codeOf([&] {
              badLoss->initialize({{"ansatz", ansatz},
                                   {"target_dist", std::vector<double>(4, 0.25)},
                                   {"accelerator", getAccelerator("sim")},
                                   {"optimizer", getOptimizer("gd-paramshift")},
                                   {"loss", "mmd"}});
          }) == ErrorCode::BadOption);

    // sampled smoke run
    auto sampled = getAlgorithm("ddcl");
    sampled->initialize({{"ansatz", ansatz},
                         {"target_dist", std::vector<double>(4, 0.25)},
                         {"accelerator", getAccelerator("sim", {{"shots", 2000}, {"seed", 2}})},
                         {"optimizer", getOptimizer("gd-paramshift", {{"initial-parameters", start},
                                                                      {"maxeval", 10},
                                                                      {"step", 0.5}})}});
    auto s = qalloc(2);
    sampled->execute(s);
    CHECK(s->metadata().get<double>("opt-val") < std::log(2.0));
}
