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
#include <sstream>

#include "qf/qf.hpp"

using namespace qf;

namespace {

class Dummy : public Service {
  public:
    static constexpr std::string_view kServiceKind = "dummy";
    [[nodiscard]] std::string name() const override { return "dummy"; }
    int counter = 0;
};

template <class F> ErrorCode codeOf(F &&f) {
    try {
        f();
    } catch (const Error &e) {
        return e.code();
    }
    FAIL("expected an exception");
    return ErrorCode::KeyMissing;
}

} // namespace

TEST_CASE("HetMap insert reports the previous value", "[hetmap]") {
    HetMap m;
    CHECK_FALSE(m.insert("shots", 8192).has_value());
    CHECK(m.get<int>("shots") == 8192);

    CHECK_FALSE(m.insert("double-key", 2.0).has_value());
    auto previous = m.insert("double-key", 3.0);
    REQUIRE(previous.has_value());
    CHECK(previous->as<double>() == 2.0);
    CHECK(m.get<double>("double-key") == 3.0);

    m.insert("vector-key", std::vector<double>{1.0, 2.0});
    CHECK(m.get<std::vector<double>>("vector-key") == std::vector<double>{1.0, 2.0});
}

TEST_CASE("HetMap typed retrieval errors", "[hetmap]") {
    HetMap m{{"shots", 8192}, {"name", "sim"}};
    CHECK(codeOf([&] { (void)m.get<double>("absent"); }) == ErrorCode::KeyMissing);
    CHECK(codeOf([&] { (void)m.get<std::string>("shots"); }) == ErrorCode::VariantMismatch);
    CHECK(codeOf([&] { (void)m.get<int>("name"); }) == ErrorCode::VariantMismatch);
    CHECK(codeOf([&] { (void)m.get<bool>("shots"); }) == ErrorCode::VariantMismatch);
    // integer widens to real, never the other way round
    CHECK(m.get<double>("shots") == 8192.0);
    m.insert("tol", 0.5);
    CHECK(codeOf([&] { (void)m.get<std::int64_t>("tol"); }) == ErrorCode::VariantMismatch);
}

TEST_CASE("HetMap round-trips every variant", "[hetmap]") {
    HetMap m;
    m.insert("i", std::int64_t{-3});
    m.insert("r", 1.25);
    m.insert("b", true);
    m.insert("s", std::string("hello"));
    m.insert("rl", std::vector<double>{0.5, 1.5});
    m.insert("il", std::vector<std::int64_t>{1, 2, 3});
    m.insert("sl", std::vector<std::string>{"a", "b"});
    m.insert("pl", PairList{{"k", "v"}});
    auto handle = std::make_shared<Dummy>();
    m.insert("h", handle);

    CHECK(m.get<std::int64_t>("i") == -3);
    CHECK(m.get<double>("r") == 1.25);
    CHECK(m.get<bool>("b"));
    CHECK(m.get<std::string>("s") == "hello");
    CHECK(m.get<std::vector<double>>("rl") == std::vector<double>{0.5, 1.5});
    CHECK(m.get<std::vector<std::int64_t>>("il") == std::vector<std::int64_t>{1, 2, 3});
    CHECK(m.get<std::vector<std::string>>("sl") == std::vector<std::string>{"a", "b"});
    CHECK(m.get<PairList>("pl") == PairList{{"k", "v"}});
    CHECK(m.getHandle<Dummy>("h") == handle);
    CHECK(codeOf([&] { (void)m.getHandle<Service>("h"); }) == ErrorCode::VariantMismatch);
}

TEST_CASE("Error messages carry the code name", "[error]") {
    Error e(ErrorCode::KeyMissing, "shots");
    CHECK(std::string(e.what()) == "KeyMissing: shots");
    CHECK(e.detail() == "shots");
    SourceError s(ErrorCode::SyntaxError, 3, 7, "unexpected token");
    CHECK(s.line() == 3);
    CHECK(s.column() == 7);
}

TEST_CASE("Registry creates fresh instances per lookup", "[registry]") {
    ServiceRegistry registry;
    registry.add<Dummy>("dummy");
    auto a = registry.get<Dummy>("dummy");
    auto b = registry.get<Dummy>("dummy");
    a->counter = 5;
    CHECK(a != b);
    CHECK(b->counter == 0);
    CHECK(registry.contains("dummy", "dummy"));
    CHECK(registry.names("dummy") == std::vector<std::string>{"dummy"});

    CHECK(codeOf([&] { registry.add<Dummy>("dummy"); }) == ErrorCode::DuplicateService);
    registry.add<Dummy>("dummy", true);
    CHECK(codeOf([&] { (void)registry.get<Dummy>("missing"); }) == ErrorCode::ServiceNotFound);
    CHECK(codeOf([&] { (void)registry.create("compiler", "dummy"); }) ==
          ErrorCode::ServiceNotFound);
}

TEST_CASE("Framework lifecycle", "[framework]") {
    if (isInitialized()) {
        finalize();
    }
    std::ostringstream out;
    initialize({"prog", "--verbose", "--plugin-list", "--accelerator=sim"}, out);
    CHECK(isInitialized());
    CHECK(verbose());
    CHECK(globalOptions().get<std::string>("accelerator") == "sim");
    const std::string listing = out.str();
    CHECK(listing.find("compiler:xasm\n") != std::string::npos);
    CHECK(listing.find("accelerator:sim\n") != std::string::npos);
    CHECK(listing.find("optimizer:neldermead\n") != std::string::npos);

    CHECK(codeOf([] { initialize(); }) == ErrorCode::DoubleInitialize);
    finalize();
    CHECK_FALSE(isInitialized());
    initialize();
    CHECK_FALSE(verbose());
    CHECK(getService<frontend::Compiler>("quil")->name() == "quil");
    finalize();
}
