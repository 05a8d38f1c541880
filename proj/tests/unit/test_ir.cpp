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
#include <algorithm>
#include <map>
#include <numbers>
#include <random>
#include <set>

#include "oracles.hpp"
#include "qf/qf.hpp"

using namespace qf;
using namespace qf::ir;
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

// The three-instruction program built through the provider API.
Composite foo() {
    QuantumIRProvider provider;
    auto c = provider.createComposite("foo", {"theta"});
    c->addInstructions({provider.createInstruction("X", {0}),
                        provider.createInstruction("Ry", {1}, {ParamExpr::symbol("theta")}),
                        provider.createInstruction("CX", {1, 0})});
    return *c;
}

struct Counter : InstructionVisitor {
    std::map<std::string, int> counts;
    int nulls = 0;
    void visitNull(const Instruction &i) override {
        ++nulls;
        ++counts[std::string(i.name())];
    }
};

struct OnlyX : InstructionVisitor {
    int x = 0;
    int nulls = 0;
    void visitX(const Instruction &) override { ++x; }
    void visitNull(const Instruction &) override { ++nulls; }
};

} // namespace

TEST_CASE("Instruction creation checks the catalog", "[ir]") {
    auto x = createInstruction("X", {0});
    CHECK(x.name() == "X");
    CHECK(x.enabled());
    auto ry = createInstruction("Ry", {1}, {ParamExpr::symbol("theta")});
    CHECK(ry.isParameterized());
    CHECK(ry.symbols() == std::vector<std::string>{"theta"});
    CHECK(createInstruction("CNOT", {0, 1}).kind() == OpKind::CX);
    CHECK(codeOf([] { (void)createInstruction("CX", {1}); }) == ErrorCode::ArityMismatch);
    CHECK(codeOf([] { (void)createInstruction("Ry", {1}); }) == ErrorCode::ArityMismatch);
    CHECK(codeOf([] { (void)createInstruction("Foo", {0}); }) == ErrorCode::UnknownInstruction);
    CHECK(codeOf([] { (void)createInstruction("CX", {1, 1}); }) == ErrorCode::ArityMismatch);

    auto m = createInstruction("Measure", {2});
    CHECK(m.cbits() == std::vector<std::size_t>{2});
}

TEST_CASE("Composite construction and counting", "[ir]") {
    QuantumIRProvider provider;
    auto empty = provider.createComposite("bar");
    CHECK(empty->nInstructions() == 0);
    CHECK(empty->variables().empty());

    auto c = foo();
    CHECK(c.nInstructions() == 3);
    CHECK(c.nQubits() == 2);
    CHECK(c.symbols() == std::vector<std::string>{"theta"});
    CHECK_NOTHROW(c.validate());

    Composite outer("outer", {"theta"});
    outer.addComposite(c);
    outer.addInstruction(createInstruction("H", {3}));
    CHECK(outer.nInstructions() == 4);
    CHECK(outer.nQubits() == 4);

    Composite broken("broken");
    broken.addInstruction(createInstruction("Rz", {0}, {ParamExpr::symbol("phi")}));
    CHECK(codeOf([&] { broken.validate(); }) == ErrorCode::UnboundSymbol);
}

TEST_CASE("Evaluation substitutes symbols and stays pure", "[ir]") {
    auto c = foo();
    const auto before = c;
    const std::vector<double> values{std::numbers::pi / 2};
    auto bound = c.evaluate(values);
    CHECK(c == before);
    CHECK(bound.variables().empty());
    auto insts = bound.instructions();
    REQUIRE(insts.size() == 3);
    CHECK_THAT(insts[1].numericParams().at(0), WithinAbs(std::numbers::pi / 2, 1e-15));
    CHECK(codeOf([&] { (void)c.evaluate(std::vector<double>{1.0, 2.0}); }) ==
          ErrorCode::ArityMismatch);
}

TEST_CASE("Arithmetic parameter expressions", "[ir]") {
    // each case is checked against direct evaluation of the same arithmetic
    struct Case {
        std::string text;
        double at;
        double expected;
    };
    const double pi = std::numbers::pi;
    const std::vector<Case> cases = {
        {"theta/2", pi, pi / 2},   {"2*theta", 0.3, 0.6},      {"-theta", 0.7, -0.7},
        {"theta+1.5", 0.5, 2.0},   {"theta-1", 3.0, 2.0},      {"pi/2 - theta", 0.0, pi / 2},
        {"0.5*theta - pi", 1.0, 0.5 - pi},
    };
    for (const auto &tc : cases) {
        auto expr = ParamExpr::parse(tc.text);
        Composite c("c", {"theta"});
        c.addInstruction(createInstruction("Rz", {0}, {expr}));
        auto bound = c.evaluate(std::vector<double>{tc.at});
        INFO(tc.text);
        CHECK_THAT(bound.instructions().front().numericParams().front(),
                   WithinAbs(tc.expected, 1e-12));
    }
    CHECK(codeOf([] { (void)ParamExpr::parse("theta*phi"); }) == ErrorCode::ParseError);
    CHECK(codeOf([] { (void)ParamExpr::parse("1/theta"); }) == ErrorCode::ParseError);
}

TEST_CASE("Symbolic programs refuse numeric access", "[ir]") {
    auto ry = createInstruction("Ry", {0}, {ParamExpr::symbol("t")});
    CHECK(codeOf([&] { (void)ry.numericParams(); }) == ErrorCode::SymbolicProgram);
}

TEST_CASE("Visitors see every enabled leaf once", "[ir]") {
    auto c = foo();
    Counter counter;
    c.accept(counter);
    CHECK(counter.counts == std::map<std::string, int>{{"X", 1}, {"Ry", 1}, {"CX", 1}});

    OnlyX onlyX;
    c.accept(onlyX);
    CHECK(onlyX.x == 1);
    CHECK(onlyX.nulls == 2);

    c.children()[0].instruction().setEnabled(false);
    OnlyX disabled;
    c.accept(disabled);
    CHECK(disabled.x == 0);
    CHECK(disabled.nulls == 2);
    CHECK(c.nInstructions() == 3);
}

TEST_CASE("Graph view of small programs", "[ir][graph]") {
    Composite bell("bell");
    bell.addInstructions({createInstruction("H", {0}), createInstruction("CX", {0, 1})});
    auto g = bell.toGraph();
    CHECK(g.entry() == 0);
    CHECK(g.exit() == 3);
    CHECK(g.hasEdge(0, 1));
    CHECK(g.hasEdge(1, 2));
    CHECK(g.hasEdge(0, 2));
    CHECK(g.hasEdge(2, 3));
    CHECK_FALSE(g.hasEdge(1, 3));
    CHECK(g.depth() == 2);

    Composite none("none");
    auto e = none.toGraph();
    CHECK(e.edges == std::vector<InstrGraph::Edge>{{0, 1}});

    Composite disjoint("d");
    disjoint.addInstructions({createInstruction("X", {0}), createInstruction("Y", {1})});
    auto d = disjoint.toGraph();
    CHECK_FALSE(d.hasEdge(1, 2));
    CHECK_FALSE(d.hasEdge(2, 1));
    CHECK(d.depth() == 1);
}

TEST_CASE("Graph soundness on random circuits", "[ir][graph]") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 50; ++trial) {
        const std::size_t n = 4;
        Composite c("r");
        c.addInstructions(oracle::toInstructions(oracle::randomCircuit(rng, n, 10, true)));
        auto g = c.toGraph();
        const auto insts = c.instructions();

        // brute force: each qubit's instruction sequence is a chain of edges
        for (std::size_t q = 0; q < n; ++q) {
            std::size_t prev = g.entry();
            for (std::size_t k = 0; k < insts.size(); ++k) {
                const auto &bits = insts[k].bits();
                if (std::find(bits.begin(), bits.end(), q) == bits.end()) {
                    continue;
                }
                CHECK(g.hasEdge(prev, k + 1));
                prev = k + 1;
            }
            if (prev != g.entry()) {
                CHECK(g.hasEdge(prev, g.exit()));
            }
        }
        // every edge points forward, so the graph is acyclic
        for (const auto &[a, b] : g.edges) {
            CHECK(a < b);
        }
        // longest chain via independent dynamic programming
        std::vector<std::size_t> longest(g.nodeCount(), 0);
        for (std::size_t node = 1; node < g.nodeCount(); ++node) {
            for (const auto &[a, b] : g.edges) {
                if (b == node) {
                    longest[node] = std::max(longest[node], longest[a] + (node == g.exit() ? 0 : 1));
                }
            }
        }
        CHECK(g.depth() == longest[g.exit()]);
    }
}

TEST_CASE("JSON persistence round-trips", "[ir][serialize]") {
    auto c = foo();
    c.children()[0].instruction().setEnabled(false);
    Composite outer("outer", {"theta"});
    outer.addComposite(c);
    auto m = createInstruction("Measure", {1});
    outer.addInstruction(m);
    outer.addInstruction(createInstruction("Rz", {0}, {ParamExpr::parse("theta/2")}));
    outer.addInstruction(createInstruction("qmi", {0, 1}, {0.25}));

    IRContainer ir;
    ir.addComposite(c);
    ir.addComposite(outer);
    const auto text = serializeIR(ir);
    CHECK(text.find("\"composites\"") != std::string::npos);
    CHECK(text.find("\"theta/2\"") != std::string::npos);
    auto back = deserializeIR(text);
    CHECK(back == ir);
    CHECK_FALSE(back.getComposite("foo")->children()[0].instruction().enabled());
    CHECK(back.getComposite("outer")->children()[0].isComposite());

    CHECK(deserializeComposite(serializeComposite(outer)) == outer);
    CHECK(codeOf([] { (void)deserializeIR("{"); }) == ErrorCode::ParseError);
    try {
        (void)deserializeIR("{\n  \"composites\": [\n  ,]}");
        FAIL("expected ParseError");
    } catch (const SourceError &e) {
        CHECK(e.code() == ErrorCode::ParseError);
        CHECK(e.line() >= 2);
    }
}

TEST_CASE("Persistence round-trip on random circuits", "[ir][serialize]") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 20; ++trial) {
        Composite c("r" + std::to_string(trial));
        c.addInstructions(oracle::toInstructions(oracle::randomCircuit(rng, 3, 12, true)));
        CHECK(deserializeComposite(serializeComposite(c)) == c);
    }
}

TEST_CASE("Identity transformation and registry misses", "[ir]") {
    if (!isInitialized()) {
        initialize();
    }
    auto c = foo();
    CHECK(applyIRTransformation("identity", c) == c);
    CHECK(codeOf([&] { (void)applyIRTransformation("nope", c); }) == ErrorCode::ServiceNotFound);
    finalize();
}
