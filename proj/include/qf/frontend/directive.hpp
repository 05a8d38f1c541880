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
#include <mutex>
#include <string>
#include <string_view>
#include <vector>

#include "qf/frontend/compiler.hpp"

namespace qf::frontend {

/// Name -> most recently compiled composite. Writes are serialized internally.
class CompilationDB {
  public:
    void store(ir::CompositePtr composite);

    /// Throws NameNotCompiled.
    [[nodiscard]] ir::CompositePtr get(std::string_view name) const;
    [[nodiscard]] bool contains(std::string_view name) const;
    [[nodiscard]] std::vector<std::string> names() const;
    void clear();

  private:
    mutable std::mutex mutex_;
    std::map<std::string, ir::CompositePtr, std::less<>> entries_;
};

/// Resolves a compiler name; the api layer passes a registry lookup.
using CompilerFactory = std::function<CompilerPtr(std::string_view name)>;

/**
 * @brief Compiles enhanced source with `.compiler`, `.circuit`, `.parameters` and `.qbit`
 * directive lines and stores every circuit in `db`.
 *
 * Circuits may call circuits compiled earlier, from this or a previous call. A circuit
 * without `.qbit` uses the buffer name `q`. Returns the names compiled, in order.
 * Throws MissingDirective when `.compiler` or `.circuit` is absent.
 */
std::vector<std::string> compileDirectives(std::string_view source, CompilationDB &db,
                                           const CompilerFactory &compilers);

} // namespace qf::frontend
