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

#include "qf/foundation/registry.hpp"

namespace qf {

namespace {
std::string key(std::string_view kind, std::string_view name) {
    return std::string(kind) + ":" + std::string(name);
}
} // namespace

void ServiceRegistry::add(std::string kind, std::string name, Factory factory, bool replace) {
    auto id = std::make_pair(std::move(kind), std::move(name));
    auto it = catalog_.find(id);
    if (it != catalog_.end()) {
        if (!replace) {
            fail(ErrorCode::DuplicateService, key(id.first, id.second));
        }
        it->second = std::move(factory);
        return;
    }
    catalog_.emplace(std::move(id), std::move(factory));
}

std::shared_ptr<Service> ServiceRegistry::create(std::string_view kind,
                                                 std::string_view name) const {
    auto it = catalog_.find(std::make_pair(std::string(kind), std::string(name)));
    if (it == catalog_.end()) {
        fail(ErrorCode::ServiceNotFound, key(kind, name));
    }
    return it->second();
}

bool ServiceRegistry::contains(std::string_view kind, std::string_view name) const {
    return catalog_.count(std::make_pair(std::string(kind), std::string(name))) != 0;
}

std::vector<std::pair<std::string, std::string>> ServiceRegistry::list() const {
    std::vector<std::pair<std::string, std::string>> out;
    out.reserve(catalog_.size());
    for (const auto &[id, factory] : catalog_) {
        out.push_back(id);
    }
    return out;
}

std::vector<std::string> ServiceRegistry::names(std::string_view kind) const {
    std::vector<std::string> out;
    for (const auto &[id, factory] : catalog_) {
        if (id.first == kind) {
            out.push_back(id.second);
        }
    }
    return out;
}

} // namespace qf
