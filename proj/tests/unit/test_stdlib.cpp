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
#include <numbers>
#include <random>
#include <set>

#include "oracles.hpp"
#include "qf/qf.hpp"
#include "qf/stdlib/gates.hpp"
#include "qf/stdlib/generators.hpp"
#include "qf/stdlib/routing.hpp"

using namespace qf;
using namespace qf::ir;
using oracle::Mat;

namespace {

constexpr double kPi = std::numbers::pi;
const oracle::Cd kI{0.0, 1.0};

template <class F> ErrorCode codeOf(F &&f) {
    try {
        f();
    } catch (const Error &e) {
        return e.code();
    }
    FAIL("expected an exception");
    return ErrorCode::KeyMissing;
}

Mat toEigen(const CMatrix &m) {
    Mat out(static_cast<Eigen::Index>(m.rows()), static_cast<Eigen::Index>(m.cols()));
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) {
            out(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = m(r, c);
        }
    }
    return out;
}

struct Framework {
    Framework() {
        if (!isInitialized()) {
            initialize();
        }
    }
    ~Framework() { finalize(); }
};

Composite dynamic(const std::string &generator, HetMap options,
                  std::vector<std::string> variables = {}) {
    Composite c(generator, std::move(variables));
    c.setGenerator(getService<CircuitGenerator>(generator), std::move(options));
    return c;
}

// Moves logical qubit l of every basis state to physical position layout[l].
Mat layoutPermutation(const std::vector<std::size_t> &layout, std::size_t n) {
    const std::size_t dim = std::size_t{1} << n;
    Mat p = Mat::Zero(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
    for (std::size_t in = 0; in < dim; ++in) {
        std::size_t out = 0;
        for (std::size_t l = 0; l < n; ++l) {
            if ((in >> (n - 1 - l)) & 1U) {
                out |= std::size_t{1} << (n - 1 - layout[l]);
            }
        }
        p(static_cast<Eigen::Index>(out), static_cast<Eigen::Index>(in)) = 1.0;
    }
    return p;
}

} // namespace

TEST_CASE("Gate matrices match textbook definitions", "[stdlib][gates]") {
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> angle(-kPi, kPi);
    for (auto kind : stdlib::gateKinds()) {
        const auto &info = opInfo(kind);
        for (int draw = 0; draw < 100; ++draw) {
            std::vector<double> params(info.nParams);
            for (auto &p : params) {
                p = angle(rng);
            }
            const Mat u = toEigen(stdlib::gateUnitary(kind, params));
            const auto dim = u.rows();
            INFO(info.name);
            CHECK(oracle::maxAbs(u.adjoint() * u - Mat::Identity(dim, dim)) < 1e-12);
            CHECK(oracle::maxAbs(u - oracle::gateMatrix(std::string(info.name), params)) < 1e-12);
        }
    }
}

TEST_CASE("Gate identities", "[stdlib][gates]") {
    Mat x(2, 2);
    x << 0, 1, 1, 0;
    CHECK(oracle::maxAbs(toEigen(stdlib::gateUnitary("X")) - x) == 0.0);

    // Ry(pi) = exp(-i pi Y / 2)
    const Mat y = oracle::pauliString({{0, 'Y'}}, 1);
    const std::vector<double> pi{kPi};
    CHECK(oracle::maxAbs(toEigen(stdlib::gateUnitary("Ry", pi)) - oracle::expm(-kI * kPi / 2.0 * y)) <
          1e-12);

    for (double theta : {0.3, 1.1, 2.9}) {
        const std::vector<double> u{theta, -kPi / 2, kPi / 2};
        const std::vector<double> rx{theta};
        CHECK(oracle::distanceUpToPhase(toEigen(stdlib::gateUnitary("U", u)),
                                        toEigen(stdlib::gateUnitary("Rx", rx))) < 1e-12);
    }
    const std::vector<double> phase{0.0, 0.0, 0.8};
    Mat p(2, 2);
    p << 1, 0, 0, std::exp(kI * 0.8);
    CHECK(oracle::maxAbs(toEigen(stdlib::gateUnitary("U", phase)) - p) < 1e-15);

    CHECK(codeOf([] { (void)stdlib::gateUnitary("Measure"); }) == ErrorCode::UnknownInstruction);
    CHECK(codeOf([] { (void)stdlib::gateUnitary("Rx"); }) == ErrorCode::ArityMismatch);
}

TEST_CASE("Annealing instruction stores canonical site order", "[stdlib]") {
    auto bias = createInstruction("qmi", {1, 1}, {0.5});
    CHECK(bias.bits() == std::vector<std::size_t>{1, 1});
    auto coupler = createInstruction("qmi", {2, 0}, {-1.0});
    CHECK(coupler.bits() == std::vector<std::size_t>{0, 2});
    CHECK(coupler.isAnnealing());
}

TEST_CASE("Lowering preserves the unitary", "[stdlib][gates]") {
    const std::vector<OpKind> allowed{OpKind::U, OpKind::CX, OpKind::H, OpKind::Rz};
    std::mt19937_64 rng(8);
    for (int trial = 0; trial < 30; ++trial) {
        auto ops = oracle::randomCircuit(rng, 3, 8, true);
        Composite original("o");
        original.addInstructions(oracle::toInstructions(ops));
        Composite lowered("l");
        for (const auto &inst : original.instructions()) {
            auto parts = stdlib::lowerInstruction(inst, allowed);
            if (parts.empty()) {
                continue; // no rule for this kind into the chosen basis
            }
            lowered.addInstructions(parts);
        }
        if (lowered.nInstructions() == 0) {
            continue;
        }
        // compare only when every instruction lowered
        bool complete = true;
        for (const auto &inst : original.instructions()) {
            complete = complete && !stdlib::lowerInstruction(inst, allowed).empty();
        }
        if (complete) {
            CHECK(oracle::distanceUpToPhase(oracle::circuitUnitary(lowered, 3),
                                            oracle::circuitUnitary(original, 3)) < 1e-9);
        }
    }
}

TEST_CASE("range generator", "[stdlib][generators]") {
    Framework fw;
    auto h = dynamic("range", {{"gate", "H"}, {"nq", 4}});
    REQUIRE(h.expand());
    auto insts = h.instructions();
    REQUIRE(insts.size() == 4);
    for (std::size_t q = 0; q < 4; ++q) {
        CHECK(insts[q].kind() == OpKind::H);
        CHECK(insts[q].bits() == std::vector<std::size_t>{q});
    }

    auto x = dynamic("range", {{"gate", "X"}, {"start", 2}, {"end", 5}});
    REQUIRE(x.expand());
    CHECK(x.instructions().size() == 3);
    CHECK(x.instructions().front().bits() == std::vector<std::size_t>{2});

    auto empty = dynamic("range", {{"gate", "H"}, {"start", 3}, {"end", 3}});
    CHECK_FALSE(empty.expand());
    auto missing = dynamic("range", {});
    CHECK_FALSE(missing.expand());
    CHECK(missing.diagnostic().find("gate") != std::string::npos);

    // unexpanded dynamic composites refuse evaluation
    auto lazy = dynamic("range", {{"gate", "H"}, {"nq", 2}});
    CHECK(codeOf([&] { (void)lazy.evaluate(std::vector<double>{}); }) ==
          ErrorCode::UnexpandedComposite);
}

TEST_CASE("qft generator equals the DFT matrix", "[stdlib][generators]") {
    Framework fw;
    for (std::size_t n = 1; n <= 4; ++n) {
        auto q = dynamic("qft", {{"nq", static_cast<std::int64_t>(n)}});
        REQUIRE(q.expand());
        INFO("n = " << n);
        CHECK(oracle::distanceUpToPhase(oracle::circuitUnitary(q, n), oracle::dft(n)) < 1e-9);
    }
    auto one = dynamic("qft", {{"nq", 1}});
    REQUIRE(one.expand());
    CHECK(one.instructions().size() == 1);
    CHECK(one.instructions().front().kind() == OpKind::H);
    CHECK_FALSE(dynamic("qft", {{"nq", 0}}).expand());
}

TEST_CASE("exp_i_theta matches the matrix exponential", "[stdlib][generators]") {
    Framework fw;
    const Mat xy = oracle::pauliString({{0, 'X'}, {1, 'Y'}}, 2);
    const Mat yx = oracle::pauliString({{0, 'Y'}, {1, 'X'}}, 2);
    auto gen = dynamic("exp_i_theta", {{"pauli", "X0 Y1 - Y0 X1"}}, {"theta"});
    REQUIRE(gen.expand());

    auto zero = gen.evaluate(std::vector<double>{0.0});
    CHECK(oracle::distanceUpToPhase(oracle::circuitUnitary(zero, 2), Mat::Identity(4, 4)) < 1e-12);

    auto at = gen.evaluate(std::vector<double>{0.7});
    const Mat expected = oracle::expm(kI * 0.7 * (xy - yx));
    CHECK(oracle::distanceUpToPhase(oracle::circuitUnitary(at, 2), expected) < 1e-9);

    auto z = dynamic("exp_i_theta", {{"pauli", "Z0"}}, {"t"});
    REQUIRE(z.expand());
    auto zAt = z.evaluate(std::vector<double>{0.4});
    const std::vector<double> rz{-0.8};
    CHECK(oracle::distanceUpToPhase(oracle::circuitUnitary(zAt, 1),
                                    oracle::gateMatrix("Rz", rz)) < 1e-12);

    CHECK(codeOf([] { (void)stdlib::expITheta(obs::PauliOperator::parse("(0,1) X0"), "t"); }) ==
          ErrorCode::ComplexCoefficient);
    CHECK(codeOf([] { (void)stdlib::expITheta(obs::PauliOperator(), "t"); }) ==
          ErrorCode::EmptyOperator);
    CHECK_FALSE(dynamic("exp_i_theta", {}, {"t"}).expand());
}

TEST_CASE("exp_i_theta single terms are exact", "[stdlib][generators]") {
    std::mt19937_64 rng(21);
    std::uniform_int_distribution<int> pick(0, 3);
    std::uniform_real_distribution<double> angle(-2.0, 2.0);
    const char paulis[] = {'I', 'X', 'Y', 'Z'};
    int done = 0;
    while (done < 20) {
        std::map<std::size_t, char> sites;
        for (std::size_t q = 0; q < 3; ++q) {
            char p = paulis[pick(rng)];
            if (p != 'I') {
                sites[q] = p;
            }
        }
        if (sites.empty()) {
            continue;
        }
        obs::PauliOps ops(sites.begin(), sites.end());
        const double coefficient = angle(rng);
        const double theta = angle(rng);
        Composite c("term", {"t"});
        c.addInstructions(stdlib::expITheta(obs::PauliOperator(ops, coefficient), "t"));
        auto bound = c.evaluate(std::vector<double>{theta});
        const Mat expected = oracle::expm(kI * theta * coefficient * oracle::pauliString(sites, 3));
        CHECK(oracle::distanceUpToPhase(oracle::circuitUnitary(bound, 3), expected) < 1e-9);
        ++done;
    }
}

TEST_CASE("fermion option is mapped before exponentiation", "[stdlib][generators]") {
    Framework fw;
    auto gen = dynamic("exp_i_theta", {{"fermion", "0^ 1 + 1^ 0"}}, {"t"});
    REQUIRE(gen.expand());
    auto bound = gen.evaluate(std::vector<double>{0.3});
    const Mat h = oracle::fermionProduct({{0, true}, {1, false}}, 2) +
                  oracle::fermionProduct({{1, true}, {0, false}}, 2);
    CHECK(oracle::distanceUpToPhase(oracle::circuitUnitary(bound, 2), oracle::expm(kI * 0.3 * h)) <
          1e-9);
}

TEST_CASE("Routing on small graphs", "[stdlib][routing]") {
    Composite adjacent("a");
    adjacent.addInstruction(createInstruction("CX", {0, 1}));
    auto same = stdlib::routeForConnectivity(adjacent, {{0, 1}});
    CHECK(same.circuit == adjacent);
    CHECK(same.swapsInserted == 0);

    Composite far("f");
    far.addInstruction(createInstruction("CX", {0, 2}));
    auto routed = stdlib::routeForConnectivity(far, {{0, 1}, {1, 2}});
    CHECK(routed.swapsInserted == 1);
    for (const auto &inst : routed.circuit.instructions()) {
        const auto &b = inst.bits();
        CHECK(((b[0] == 0 && b[1] == 1) || (b[0] == 1 && b[1] == 0) || (b[0] == 1 && b[1] == 2) ||
               (b[0] == 2 && b[1] == 1)));
    }
    const Mat expected = layoutPermutation(routed.finalLayout, 3) * oracle::circuitUnitary(far, 3);
    CHECK(oracle::maxAbs(oracle::circuitUnitary(routed.circuit, 3) - expected) < 1e-12);

    Composite split("s");
    split.addInstruction(createInstruction("CX", {0, 3}));
    CHECK(codeOf([&] { (void)stdlib::routeForConnectivity(split, {{0, 1}, {2, 3}}); }) ==
          ErrorCode::DisconnectedQubit);
}

TEST_CASE("Routing preserves semantics on random graphs", "[stdlib][routing]") {
    Framework fw;
    std::mt19937_64 rng(17);
    const std::size_t n = 4;
    for (int trial = 0; trial < 40; ++trial) {
        // random spanning tree plus a few extra edges keeps the graph connected
        std::vector<std::int64_t> flat;
        std::set<std::pair<std::size_t, std::size_t>> edges;
        for (std::size_t v = 1; v < n; ++v) {
            std::size_t parent = std::uniform_int_distribution<std::size_t>(0, v - 1)(rng);
            edges.insert({parent, v});
        }
        if (std::bernoulli_distribution(0.5)(rng)) {
            edges.insert({0, n - 1});
        }
        for (const auto &[a, b] : edges) {
            flat.push_back(static_cast<std::int64_t>(a));
            flat.push_back(static_cast<std::int64_t>(b));
        }
        Composite c("r");
        c.addInstructions(oracle::toInstructions(oracle::randomCircuit(rng, n, 12, true)));
        auto out = applyIRTransformation("swap-routing", c, {{"edges", flat}});
        for (const auto &inst : out.instructions()) {
            if (inst.bits().size() == 2) {
                auto a = std::min(inst.bits()[0], inst.bits()[1]);
                auto b = std::max(inst.bits()[0], inst.bits()[1]);
                CHECK(edges.count({a, b}) == 1);
            }
        }
        auto layout64 = out.metadata().get<std::vector<std::int64_t>>("final-layout");
        std::vector<std::size_t> layout(layout64.begin(), layout64.end());
        REQUIRE(layout.size() == n);
        const Mat expected = layoutPermutation(layout, n) * oracle::circuitUnitary(c, n);
        CHECK(oracle::maxAbs(oracle::circuitUnitary(out, n) - expected) < 1e-9);
    }
    Composite c("c");
    CHECK(codeOf([&] {
              (void)applyIRTransformation("swap-routing", c,
                                          {{"edges", std::vector<std::int64_t>{0, 1, 2}}});
          }) == ErrorCode::BadOption);
}
