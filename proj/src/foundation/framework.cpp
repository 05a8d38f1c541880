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

#include "qf/foundation/framework.hpp"

#include <iostream>

namespace qf {

namespace {

struct FrameworkState {
    bool initialized = false;
    ServiceRegistry registry;
    HetMap options;
};

FrameworkState &state() {
    static FrameworkState instance;
    return instance;
}

HetMap parseOptions(const std::vector<std::string> &args) {
    HetMap options;
    for (const auto &arg : args) {
        if (arg.size() <= 2 || arg.compare(0, 2, "--") != 0) {
            continue;
        }
        auto body = arg.substr(2);
        auto eq = body.find('=');
        if (eq == std::string::npos) {
            options.insert(body, true);
        } else {
            options.insert(body.substr(0, eq), body.substr(eq + 1));
        }
    }
    return options;
}

} // namespace

void initialize(const std::vector<std::string> &args) { initialize(args, std::cout); }

void initialize(int argc, char **argv) {
    std::vector<std::string> args;
    args.reserve(static_cast<std::size_t>(argc));
    for (int i = 0; i < argc; ++i) {
        args.emplace_back(argv[i]);
    }
    initialize(args);
}

void initialize(const std::vector<std::string> &args, std::ostream &out) {
    auto &s = state();
    if (s.initialized) {
        fail(ErrorCode::DoubleInitialize, "framework is already initialized");
    }
    s.options = parseOptions(args);
    s.registry.clear();
    registerBuiltinServices(s.registry);
    s.initialized = true;

    if (s.options.getOr("plugin-list", false)) {
        for (const auto &[kind, name] : s.registry.list()) {
            out << kind << ':' << name << '\n';
        }
    }
}

void finalize() {
    auto &s = state();
    if (!s.initialized) {
        return;
    }
    s.registry.clear();
    s.options = HetMap{};
    resetApiState();
    s.initialized = false;
}

bool isInitialized() noexcept { return state().initialized; }

ServiceRegistry &serviceRegistry() noexcept { return state().registry; }

const HetMap &globalOptions() noexcept { return state().options; }

bool verbose() noexcept {
    const auto &options = state().options;
    return options.holds<bool>("verbose") && options.get<bool>("verbose");
}

} // namespace qf
