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

#include "qf/frontend/directive.hpp"

#include <algorithm>
#include <cctype>
#include <optional>
#include <sstream>

namespace qf::frontend {

namespace {

std::string_view trim(std::string_view s) {
    auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) {
        return {};
    }
    auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

struct PendingCircuit {
    KernelHeader header;
    std::string body;
    std::size_t bodyLine = 0;
    bool hasQbit = false;
    bool hasParameters = false;
};

bool isIdentifier(std::string_view s) {
    if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) {
        return false;
    }
    return std::all_of(s.begin(), s.end(), [](char c) {
        return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
    });
}

[[noreturn]] void directiveError(std::size_t line, const std::string &message,
                                 ErrorCode code = ErrorCode::SyntaxError) {
    throw SourceError(code, line, 1, message);
}

} // namespace

void CompilationDB::store(ir::CompositePtr composite) {
    std::lock_guard lock(mutex_);
    entries_[composite->name()] = std::move(composite);
}

ir::CompositePtr CompilationDB::get(std::string_view name) const {
    std::lock_guard lock(mutex_);
    auto it = entries_.find(name);
    if (it == entries_.end()) {
        fail(ErrorCode::NameNotCompiled, std::string(name));
    }
    return it->second;
}

bool CompilationDB::contains(std::string_view name) const {
    std::lock_guard lock(mutex_);
    return entries_.contains(name);
}

std::vector<std::string> CompilationDB::names() const {
    std::lock_guard lock(mutex_);
    std::vector<std::string> out;
    for (const auto &[name, c] : entries_) {
        out.push_back(name);
    }
    return out;
}

void CompilationDB::clear() {
    std::lock_guard lock(mutex_);
    entries_.clear();
}

std::vector<std::string> compileDirectives(std::string_view source, CompilationDB &db,
                                           const CompilerFactory &compilers) {
    std::optional<std::string> compilerName;
    std::vector<PendingCircuit> circuits;
    std::size_t lineNo = 0;
    std::istringstream lines{std::string(source)};
    for (std::string raw; std::getline(lines, raw);) {
        ++lineNo;
        std::string_view line = trim(raw);
        if (line.empty() || line.front() != '.') {
            if (!circuits.empty()) {
                circuits.back().body += raw + "\n";
            } else if (!line.empty() && line.rfind("//", 0) != 0 && line.front() != '#') {
                directiveError(lineNo, ".circuit: source text before the first .circuit directive",
                               ErrorCode::MissingDirective);
            }
            continue;
        }
        auto space = line.find_first_of(" \t");
        std::string_view keyword = line.substr(0, space);
        std::string_view argument =
            space == std::string_view::npos ? std::string_view{} : trim(line.substr(space));
        auto requireCircuit = [&] {
            if (circuits.empty()) {
                directiveError(lineNo, std::string(keyword) + " must follow a .circuit directive");
            }
            return &circuits.back();
        };
        if (keyword == ".compiler") {
            if (compilerName) {
                directiveError(lineNo, "only one .compiler directive is allowed");
            }
            if (!isIdentifier(argument)) {
                directiveError(lineNo, ".compiler needs a compiler name");
            }
            compilerName = std::string(argument);
        } else if (keyword == ".circuit") {
            if (!isIdentifier(argument)) {
                directiveError(lineNo, ".circuit needs a circuit name");
            }
            PendingCircuit c;
            c.header.name = std::string(argument);
            c.header.line = lineNo;
            c.bodyLine = lineNo + 1;
            circuits.push_back(std::move(c));
        } else if (keyword == ".parameters") {
            auto *c = requireCircuit();
            c->hasParameters = true;
            std::string_view rest = argument;
            while (!rest.empty()) {
                auto comma = rest.find(',');
                std::string_view name = trim(rest.substr(0, comma));
                if (!isIdentifier(name)) {
                    directiveError(lineNo, "bad parameter name '" + std::string(name) + "'");
                }
                c->header.parameters.emplace_back(name);
                rest = comma == std::string_view::npos ? std::string_view{} : rest.substr(comma + 1);
            }
        } else if (keyword == ".qbit") {
            auto *c = requireCircuit();
            if (!isIdentifier(argument)) {
                directiveError(lineNo, ".qbit needs a buffer name");
            }
            c->header.buffer = std::string(argument);
            c->hasQbit = true;
        } else {
            directiveError(lineNo, "unknown directive '" + std::string(keyword) + "'");
        }
        if (keyword != ".circuit" && !circuits.empty()) {
            circuits.back().body += "\n"; // keep body line numbers aligned with the source
        }
    }
    if (!compilerName) {
        fail(ErrorCode::MissingDirective, ".compiler");
    }
    if (circuits.empty()) {
        fail(ErrorCode::MissingDirective, ".circuit");
    }
    auto compiler = compilers(*compilerName);

    KernelLookup lookup = [&db](std::string_view name) -> const ir::Composite * {
        return db.contains(name) ? db.get(name).get() : nullptr;
    };
    // A circuit without .parameters shares the parameters of the circuit before it, so a
    // wrapper such as `ansatz(theta, phi)` can forward them.
    for (std::size_t k = 1; k < circuits.size(); ++k) {
        if (!circuits[k].hasParameters) {
            circuits[k].header.parameters = circuits[k - 1].header.parameters;
        }
    }
    std::vector<std::string> compiled;
    for (auto &c : circuits) {
        KernelUnit unit;
        unit.header = c.header;
        unit.body = ir::tokenize(c.body, c.bodyLine);
        auto composite = std::make_shared<ir::Composite>(compiler->compileKernel(unit, lookup));
        db.store(composite);
        compiled.push_back(composite->name());
    }
    return compiled;
}

} // namespace qf::frontend
