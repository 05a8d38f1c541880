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

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <numbers>
#include <random>
#include <set>
#include <tuple>
#include <thread>

#include "noise.hpp"
#include "oracles.hpp"
#include "qf/qf.hpp"

// after Eigen: resolv.h, pulled in by httplib, defines a macro named _res
#include <httplib.h>

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

struct Framework {
    Framework() {
        if (!isInitialized()) {
            initialize();
        }
    }
    ~Framework() { finalize(); }
};

ir::Composite bell() {
    ir::Composite c("bell");
    c.addInstructions({createInstruction("H", {0}), createInstruction("CX", {0, 1}),
                       createInstruction("Measure", {0}), createInstruction("Measure", {1})});
    return c;
}

ir::Composite sweep(double t) {
    ir::Composite c("sweep");
    c.addInstructions({createInstruction("X", {0}), createInstruction("Ry", {1}, {t}),
                       createInstruction("CX", {1, 0}), createInstruction("Measure", {0})});
    return c;
}

ir::Composite flipTo(const std::string &state) {
    ir::Composite c("prep-" + state);
    for (std::size_t q = 0; q < state.size(); ++q) {
        if (state[q] == '1') {
            c.addInstruction(createInstruction("X", {q}));
        }
    }
    for (std::size_t q = 0; q < state.size(); ++q) {
        c.addInstruction(createInstruction("Measure", {q}));
    }
    return c;
}

ir::Composite ising(const std::vector<std::tuple<std::size_t, std::size_t, double>> &terms) {
    ir::Composite c("ising");
    for (const auto &[i, j, w] : terms) {
        c.addInstruction(createInstruction("qmi", {i, j}, {w}));
    }
    return c;
}

// Independent brute force: spin '1' = -1, qubit 0 leftmost.
std::pair<double, std::set<std::string>>
bruteForceIsing(const std::vector<std::tuple<std::size_t, std::size_t, double>> &terms,
                std::size_t n) {
    double best = std::numeric_limits<double>::infinity();
    std::set<std::string> states;
    for (std::size_t code = 0; code < (std::size_t{1} << n); ++code) {
        std::string bits;
        std::vector<int> s(n);
        for (std::size_t q = 0; q < n; ++q) {
            const bool one = (code >> (n - 1 - q)) & 1U;
            bits.push_back(one ? '1' : '0');
            s[q] = one ? -1 : 1;
        }
        double e = 0.0;
        for (const auto &[i, j, w] : terms) {
            e += i == j ? w * s[i] : w * s[i] * s[j];
        }
        if (e < best) {
            best = e;
            states = {bits};
        } else if (e == best) {
            states.insert(bits);
        }
    }
    return {best, states};
}

} // namespace

TEST_CASE("Buffers", "[backend][buffer]") {
    Framework fw;
    auto b = qalloc(3);
    CHECK(b->size() == 3);
    CHECK(b->counts().empty());
    CHECK(qalloc(2)->size() == 2);
    CHECK(codeOf([] { (void)qalloc(0); }) == ErrorCode::InvalidSize);
    CHECK(codeOf([&] { b->appendMeasurement("01"); }) == ErrorCode::InvalidSize);
    CHECK(codeOf([&] { (void)b->getExpectationValueZ(); }) == ErrorCode::EmptyBuffer);

    auto two = qalloc(2);
    two->appendMeasurement("00", 100);
    CHECK(two->getExpectationValueZ() == 1.0);
    auto one = qalloc(1);
    one->appendMeasurement("1", 60);
    one->appendMeasurement("0", 40);
    CHECK_THAT(one->getExpectationValueZ(), WithinAbs(-0.2, 1e-15));
    CHECK(one->totalShots() == 100);
    CHECK(one->distribution() == std::vector<double>{0.4, 0.6});

    auto child = qalloc(1);
    child->appendMeasurement("1");
    one->appendChild("c", child);
    CHECK(one->children().size() == 1);
    CHECK(one->totalShots() == 100);
}

TEST_CASE("Bell program sampled", "[backend][sim]") {
    Framework fw;
    auto buffer = qalloc(2);
    getAccelerator("sim", {{"shots", 8192}, {"seed", 42}})->execute(buffer, bell());
    const double sigma = std::sqrt(8192 * 0.25);
    std::int64_t total = 0;
    for (const auto &[bits, count] : buffer->counts()) {
        INFO(bits);
        CHECK((bits == "00" || bits == "11"));
        CHECK(std::abs(static_cast<double>(count) - 4096.0) < 5 * sigma);
        total += count;
    }
    CHECK(total == 8192);
    CHECK(buffer->metadata().get<std::int64_t>("shots") == 8192);
    CHECK(buffer->getExpectationValueZ() == 1.0);
}

TEST_CASE("Exact-mode sweep follows -cos t", "[backend][sim]") {
    Framework fw;
    auto exact = getAccelerator("sim");
    auto sampled = getAccelerator("sim", {{"shots", 8192}, {"seed", 3}});
    for (int k = 0; k < 20; ++k) {
        const double t = -std::numbers::pi + 2 * std::numbers::pi * k / 19.0;
        const auto program = sweep(t);

        // dense oracle: <Z0> = P(q0 = 0) - P(q0 = 1)
        const auto p = oracle::probabilities(oracle::circuitUnitary(program, 2));
        const double oracleZ = p[0] + p[1] - p[2] - p[3];

        auto b = qalloc(2);
        exact->execute(b, program);
        INFO("t = " << t);
        CHECK_THAT(b->getExpectationValueZ(), WithinAbs(-std::cos(t), 1e-9));
        CHECK_THAT(oracleZ, WithinAbs(-std::cos(t), 1e-9));
        CHECK(b->counts().empty());

        auto s = qalloc(2);
        sampled->execute(s, program);
        CHECK_THAT(s->getExpectationValueZ(), WithinAbs(-std::cos(t), 0.05));
    }
}

TEST_CASE("Exact mode records the state", "[backend][sim]") {
    Framework fw;
    auto b = qalloc(2);
    getAccelerator("sim")->execute(b, bell());
    CHECK_THAT(b->getExpectationValueZ(), WithinAbs(1.0, 1e-12));
    const auto flat = b->metadata().get<std::vector<double>>("statevector");
    REQUIRE(flat.size() == 8);
    const auto u = oracle::circuitUnitary(bell(), 2);
    for (int i = 0; i < 4; ++i) {
        CHECK_THAT(flat[2 * i], WithinAbs(u(i, 0).real(), 1e-12));
        CHECK_THAT(flat[2 * i + 1], WithinAbs(u(i, 0).imag(), 1e-12));
    }

    auto big = qalloc(11);
    getAccelerator("sim")->execute(big, bell());
    CHECK_FALSE(big->metadata().contains("statevector"));
    CHECK(big->metadata().contains("exp-val-z"));
}

TEST_CASE("Statevector stays normalized and matches the oracle", "[backend][sim]") {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 30; ++trial) {
        const auto ops = oracle::randomCircuit(rng, 4, 25, true);
        StateVector state(4);
        for (const auto &inst : oracle::toInstructions(ops)) {
            state.apply(inst);
            REQUIRE_THAT(state.norm(), WithinAbs(1.0, 1e-12));
        }
        const auto u = oracle::circuitUnitary(ops, 4);
        for (int i = 0; i < 16; ++i) {
            CHECK(std::abs(state.amplitudes()[i] - u(i, 0)) < 1e-10);
        }
    }
}

TEST_CASE("Sampling converges to the Born distribution", "[backend][sim]") {
    Framework fw;
    std::mt19937_64 rng(23);
    const std::int64_t shots = 100000;
    for (int trial = 0; trial < 5; ++trial) {
        const auto ops = oracle::randomCircuit(rng, 3, 12, true);
        ir::Composite c("random");
        c.addInstructions(oracle::toInstructions(ops));
        const auto p = oracle::probabilities(oracle::circuitUnitary(ops, 3));
        auto b = qalloc(3);
        getAccelerator("sim", {{"shots", shots}, {"seed", 100 + trial}})->execute(b, c);
        const auto freq = b->distribution();
        for (std::size_t i = 0; i < 8; ++i) {
            const double sigma = std::sqrt(p[i] * (1 - p[i]) / static_cast<double>(shots));
            INFO("outcome " << i << " p=" << p[i] << " f=" << freq[i]);
            CHECK(std::abs(freq[i] - p[i]) <= 5 * sigma + 1e-12);
        }
    }
}

TEST_CASE("Seeded runs are reproducible", "[backend][sim]") {
    Framework fw;
    const auto program = sweep(0.7);
    auto a = qalloc(2);
    auto b = qalloc(2);
    getAccelerator("sim", {{"shots", 500}, {"seed", 9}})->execute(a, program);
    getAccelerator("sim", {{"shots", 500}, {"seed", 9}})->execute(b, program);
    CHECK(a->counts() == b->counts());

    auto exact = qalloc(2);
    getAccelerator("sim")->execute(exact, program);
    auto sampled = qalloc(2);
    getAccelerator("sim", {{"shots", 20000}, {"seed", 1}})->execute(sampled, program);
    const double z = exact->getExpectationValueZ();
    const double sigma = std::sqrt((1 - z * z) / 20000.0);
    CHECK(std::abs(sampled->getExpectationValueZ() - z) < 5 * sigma + 1e-12);
}

TEST_CASE("Mid-circuit measurement collapses the state", "[backend][sim]") {
    Framework fw;
    // H, measure, H: without collapse the second readout would always be 0.
    ir::Composite c("collapse");
    c.addInstructions({createInstruction("H", {0}),
                       ir::Instruction(ir::OpKind::Measure, {0}, {}, {1}),
                       createInstruction("H", {0}), createInstruction("Measure", {0})});
    auto b = qalloc(2);
    getAccelerator("sim", {{"shots", 4000}, {"seed", 5}})->execute(b, c);
    std::int64_t secondOnes = 0;
    for (const auto &[bits, count] : b->counts()) {
        if (bits[0] == '1') {
            secondOnes += count;
        }
    }
    CHECK(std::abs(static_cast<double>(secondOnes) - 2000.0) < 5 * std::sqrt(1000.0));
    CHECK(b->counts().size() == 4);

    // exact mode keeps the unitary picture; both classical bits read qubit 0, so Z0 Z0 = 1
    auto e = qalloc(2);
    getAccelerator("sim")->execute(e, c);
    CHECK_THAT(e->metadata().get<double>("exp-val-z"), WithinAbs(1.0, 1e-12));
    CHECK(e->metadata().get<std::vector<double>>("probabilities")[0] > 0.99);
}

TEST_CASE("Simulator input checks", "[backend][sim]") {
    Framework fw;
    auto sim = getAccelerator("sim", {{"shots", 10}});
    ir::Composite far("far");
    far.addInstruction(createInstruction("X", {5}));
    CHECK(codeOf([&] { sim->execute(qalloc(2), far); }) == ErrorCode::QubitOutOfRange);

    ir::Composite symbolic("sym", {"t"});
    symbolic.addInstruction(createInstruction("Rx", {0}, {ir::ParamExpr::symbol("t")}));
    CHECK(codeOf([&] { sim->execute(qalloc(1), symbolic); }) == ErrorCode::SymbolicProgram);
    CHECK(codeOf([&] { sim->execute(qalloc(21), bell()); }) == ErrorCode::InvalidSize);
    CHECK(codeOf([&] { sim->execute(qalloc(2), ising({{0, 1, 1.0}})); }) ==
          ErrorCode::MixedModelProgram);
}

TEST_CASE("Batched execution creates labelled children", "[backend][sim]") {
    Framework fw;
    auto buffer = qalloc(2);
    std::vector<ir::CompositePtr> programs{std::make_shared<ir::Composite>(bell()),
                                           std::make_shared<ir::Composite>(flipTo("10"))};
    getAccelerator("sim", {{"shots", 100}, {"seed", 1}})->execute(buffer, programs);
    REQUIRE(buffer->children().size() == 2);
    CHECK(buffer->children()[0].first == "bell");
    CHECK(buffer->children()[1].first == "prep-10");
    CHECK(buffer->children()[1].second->counts() == obs::Counts{{"10", 100}});
    CHECK(buffer->counts().empty());
}

TEST_CASE("Decorators", "[backend][decorator]") {
    Framework fw;
    const HetMap options{{"shots", 1000}, {"seed", 11}};
    auto plain = qalloc(2);
    getAccelerator("sim", options)->execute(plain, bell());
    auto wrapped = qalloc(2);
    decorate("identity", getAccelerator("sim", options))->execute(wrapped, bell());
    CHECK(wrapped->counts() == plain->counts());
    CHECK(wrapped->metadata() == plain->metadata());
    CHECK(codeOf([] { (void)decorate("nope", getAccelerator("sim")); }) ==
          ErrorCode::ServiceNotFound);

    // noiseless channel: corrected equals raw
    auto clean = qalloc(2);
    decorate("ro-error", getAccelerator("sim", options), {{"p01", 0.0}, {"p10", 0.0}})
        ->execute(clean, sweep(0.4));
    CHECK_THAT(clean->metadata().get<double>("exp-val"),
               WithinAbs(clean->getExpectationValueZ(), 1e-15));

    // chaining through identity changes nothing
    auto direct = qalloc(2);
    decorate("ro-error", getAccelerator("sim", options), {{"p01", 0.1}, {"p10", 0.2}})
        ->execute(direct, sweep(0.4));
    auto chained = qalloc(2);
    decorate("ro-error", decorate("identity", getAccelerator("sim", options)),
             {{"p01", 0.1}, {"p10", 0.2}})
        ->execute(chained, sweep(0.4));
    CHECK(chained->metadata().get<double>("exp-val") == direct->metadata().get<double>("exp-val"));

    // one qubit: the closed form (raw - (p10 - p01)) / (1 - p01 - p10)
    const double raw = direct->getExpectationValueZ();
    CHECK_THAT(direct->metadata().get<double>("exp-val"),
               WithinAbs((raw - (0.2 - 0.1)) / (1 - 0.1 - 0.2), 1e-12));

    auto bad = decorate("ro-error", getAccelerator("sim", options), {{"p01", 0.6}, {"p10", 0.5}});
    CHECK(codeOf([&] { bad->execute(qalloc(2), bell()); }) == ErrorCode::DegenerateChannel);

    auto exact = qalloc(2);
    decorate("ro-error", getAccelerator("sim"), {{"p01", 0.1}, {"p10", 0.1}})->execute(exact, bell());
    CHECK_THAT(exact->metadata().get<double>("exp-val"), WithinAbs(1.0, 1e-12));
}

TEST_CASE("Readout mitigation undoes injected flips", "[backend][decorator]") {
    Framework fw;
    for (const std::string state : {"0", "1", "01", "11"}) {
        auto noisy = std::make_shared<oracle::FlipNoise>();
        noisy->setDecorated(getAccelerator("sim", {{"shots", 100000}, {"seed", 4}}));
        noisy->updateConfiguration({{"flip-p01", 0.03}, {"flip-p10", 0.05}, {"flip-seed", 8}});
        auto mitigated = decorate("ro-error", noisy, {{"p01", 0.03}, {"p10", 0.05}});
        auto b = qalloc(state.size());
        mitigated->execute(b, flipTo(state));
        const double truth = (std::count(state.begin(), state.end(), '1') % 2) ? -1.0 : 1.0;
        INFO(state << ": raw " << b->getExpectationValueZ());
        CHECK(std::abs(b->getExpectationValueZ() - truth) > 0.04);
        CHECK_THAT(b->metadata().get<double>("exp-val"), WithinAbs(truth, 0.02));
    }
}

TEST_CASE("Annealer finds every ground state", "[backend][anneal]") {
    Framework fw;
    auto annealer = getAccelerator("anneal");

    auto decoupled = qalloc(2);
    annealer->execute(decoupled, ising({{0, 0, 1.0}, {1, 1, 1.0}}));
    CHECK(decoupled->metadata().get<double>("ground-energy") == -2.0);
    CHECK(decoupled->counts() == obs::Counts{{"11", 1}});

    auto ferro = qalloc(2);
    annealer->execute(ferro, ising({{0, 1, -1.0}}));
    CHECK(ferro->metadata().get<double>("ground-energy") == -1.0);
    CHECK(ferro->counts() == obs::Counts{{"00", 1}, {"11", 1}});

    // the small two-spin kernel with h = 0.5 and j = -2
    const std::vector<std::tuple<std::size_t, std::size_t, double>> kernel{
        {0, 0, 0.5}, {1, 1, 0.5}, {0, 1, -2.0}};
    auto k = qalloc(2);
    annealer->execute(k, ising(kernel));
    const auto [energy, states] = bruteForceIsing(kernel, 2);
    CHECK(k->metadata().get<double>("ground-energy") == energy);
    for (const auto &s : states) {
        CHECK(k->counts().count(s) == 1);
    }
    CHECK(k->counts().size() == states.size());

    ir::Composite mixed = ising({{0, 1, 1.0}});
    mixed.addInstruction(createInstruction("H", {0}));
    CHECK(codeOf([&] { annealer->execute(qalloc(2), mixed); }) == ErrorCode::MixedModelProgram);
}

TEST_CASE("Annealer agrees with brute force on random 3-spin models", "[backend][anneal]") {
    Framework fw;
    std::mt19937_64 rng(13);
    const double weights[] = {-1.0, -0.5, 0.0, 0.5, 1.0};
    std::uniform_int_distribution<int> pick(0, 4);
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<std::tuple<std::size_t, std::size_t, double>> terms;
        for (std::size_t i = 0; i < 3; ++i) {
            for (std::size_t j = i; j < 3; ++j) {
                terms.emplace_back(i, j, weights[pick(rng)]);
            }
        }
        auto b = qalloc(3);
        getAccelerator("anneal")->execute(b, ising(terms));
        const auto [energy, states] = bruteForceIsing(terms, 3);
        CHECK(b->metadata().get<double>("ground-energy") == energy);
        CHECK(b->counts().size() == states.size());
    }
}

TEST_CASE("Remote execution matches local execution", "[backend][remote]") {
    Framework fw;
    ReferenceServer server;
    server.start();
    const HetMap options{{"shots", 1024}, {"seed", 77}};

    auto local = qalloc(2);
    getAccelerator("sim", options)->execute(local, bell());

    auto remote = getAccelerator("remote", options);
    remote->updateConfiguration({{"endpoint", server.endpoint()}});
    auto viaServer = qalloc(2);
    remote->execute(viaServer, bell());
    CHECK(viaServer->counts() == local->counts());
    CHECK(viaServer->metadata().get<std::int64_t>("shots") == 1024);

    // wider caller buffer: the unused positions read '0'
    auto wide = qalloc(3);
    remote->execute(wide, bell());
    for (const auto &[bits, count] : wide->counts()) {
        CHECK(bits.back() == '0');
    }

    RemoteClient client(server.endpoint());
    CHECK(codeOf([&] { (void)client.poll("job-does-not-exist"); }) == ErrorCode::JobNotFound);
    auto id = client.submit(bell(), 16, 1);
    CHECK(client.wait(id, std::chrono::seconds(5), std::chrono::milliseconds(5)).counts.size() <= 2);

    const auto endpoint = server.endpoint();
    server.stop();
    auto down = getAccelerator("remote", {{"endpoint", endpoint}, {"timeout", 0.5}});
    CHECK(codeOf([&] { down->execute(qalloc(2), bell()); }) == ErrorCode::HttpError);
}

TEST_CASE("Remote jobs that never finish time out", "[backend][remote]") {
    httplib::Server stub;
    stub.Post("/jobs", [](const httplib::Request &, httplib::Response &res) {
        res.status = 201;
        res.set_content(R"({"id":"x"})", "application/json");
    });
    stub.Get(R"(/jobs/(\w+))", [](const httplib::Request &, httplib::Response &res) {
        res.set_content(R"({"status":"running"})", "application/json");
    });
    const int port = stub.bind_to_any_port("127.0.0.1");
    std::thread serving([&] { stub.listen_after_bind(); });
    stub.wait_until_ready();

    RemoteClient client("http://127.0.0.1:" + std::to_string(port));
    const auto id = client.submit(bell(), 10);
    CHECK(id == "x");
    CHECK(codeOf([&] {
              (void)client.wait(id, std::chrono::milliseconds(100), std::chrono::milliseconds(10));
          }) == ErrorCode::Timeout);
    stub.stop();
    serving.join();
}

TEST_CASE("Endpoint resolution", "[backend][remote]") {
    ::unsetenv("QF_REMOTE_ENDPOINT");
    CHECK(resolveEndpoint({}) == "http://127.0.0.1:8000");
    ::setenv("QF_REMOTE_ENDPOINT", "http://example.invalid:9", 1);
    CHECK(resolveEndpoint({}) == "http://example.invalid:9");
    CHECK(resolveEndpoint({{"endpoint", "http://h:1"}}) == "http://h:1");
    ::unsetenv("QF_REMOTE_ENDPOINT");
}
