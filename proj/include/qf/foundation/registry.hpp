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

#pragma once

#include <functional>
#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qf/foundation/error.hpp"

namespace qf {

/**
 * @brief Common base of every pluggable implementation.
 *
 * Concrete interfaces declare `static constexpr std::string_view kServiceKind`, which is the
 * registry kind they are looked up under (e.g. "compiler").
 */
class Service {
  public:
    virtual ~Service() = default;
    [[nodiscard]] virtual std::string name() const = 0;
    [[nodiscard]] virtual std::string description() const { return {}; }
};

/**
 * @brief Catalog of (kind, name) -> factory.
 *
 * Every lookup calls the factory, so callers never share mutable service state.
 * Concurrent `create` calls are safe once registration has finished; `add` and `clear`
 * must not race with anything.
 */
class ServiceRegistry {
  public:
    using Factory = std::function<std::shared_ptr<Service>()>;

    /// Throws DuplicateService unless `replace` is set.
    void add(std::string kind, std::string name, Factory factory, bool replace = false);

    template <class T> void add(std::string name, bool replace = false) {
        add(std::string(T::kServiceKind), std::move(name),
            [] { return std::static_pointer_cast<Service>(std::make_shared<T>()); }, replace);
    }

    /// Throws ServiceNotFound.
    [[nodiscard]] std::shared_ptr<Service> create(std::string_view kind,
                                                  std::string_view name) const;

    template <class T> [[nodiscard]] std::shared_ptr<T> get(std::string_view name) const {
        auto service = std::dynamic_pointer_cast<T>(create(T::kServiceKind, name));
        if (!service) {
            fail(ErrorCode::ServiceNotFound,
                 std::string(T::kServiceKind) + ":" + std::string(name) +
                     " does not implement the requested interface");
        }
        return service;
    }

    [[nodiscard]] bool contains(std::string_view kind, std::string_view name) const;

    /// Registered (kind, name) pairs in sorted order.
    [[nodiscard]] std::vector<std::pair<std::string, std::string>> list() const;
    [[nodiscard]] std::vector<std::string> names(std::string_view kind) const;

    void clear() noexcept { catalog_.clear(); }
    [[nodiscard]] bool empty() const noexcept { return catalog_.empty(); }
    [[nodiscard]] std::size_t size() const noexcept { return catalog_.size(); }

  private:
    std::map<std::pair<std::string, std::string>, Factory, std::less<>> catalog_;
};

} // namespace qf
