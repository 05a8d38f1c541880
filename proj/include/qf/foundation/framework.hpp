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

#include <iosfwd>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "qf/foundation/het_map.hpp"
#include "qf/foundation/registry.hpp"

namespace qf {

/**
 * @brief Starts the framework: registers every built-in service and parses options.
 *
 * Recognised options: `--verbose` (boolean), `--plugin-list` (prints `kind:name` lines to
 * `out`), `--key=value` (stored as text). Anything not starting with `--` is ignored, so
 * `argv[0]` can be passed through unchanged.
 *
 * Throws DoubleInitialize when already initialized. Not thread-safe.
 */
void initialize(const std::vector<std::string> &args = {});
void initialize(int argc, char **argv);
void initialize(const std::vector<std::string> &args, std::ostream &out);

/// Clears the registry and global state. No-op when not initialized.
void finalize();

[[nodiscard]] bool isInitialized() noexcept;

/// The process-wide registry. Empty outside an initialize/finalize window.
ServiceRegistry &serviceRegistry() noexcept;

/// Options parsed by the last initialize().
[[nodiscard]] const HetMap &globalOptions() noexcept;

[[nodiscard]] bool verbose() noexcept;

template <class T> [[nodiscard]] std::shared_ptr<T> getService(std::string_view name) {
    return serviceRegistry().get<T>(name);
}

/// Installs all built-in services. Defined by the api layer.
void registerBuiltinServices(ServiceRegistry &registry);

/// Hook invoked by finalize() to drop api-level state (compilation database).
void resetApiState();

} // namespace qf
