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

/**
 * @file
 * @brief Public entry point.
 *
 * @code
 * qf::initialize(argc, argv);
 * qf::qasm(R"(.compiler xasm
 * .circuit bell
 * .qbit q
 * H(q[0]);
 * CX(q[0], q[1]);
 * Measure(q[0]);
 * Measure(q[1]);
 * )");
 * auto buffer = qf::qalloc(2);
 * qf::getAccelerator("sim", {{"shots", 1024}})->execute(buffer, qf::getCompiled("bell"));
 * qf::finalize();
 * @endcode
 */

#include <memory>
#include <string>
#include <string_view>

#include "qf/algorithm/algorithm.hpp"
#include "qf/algorithm/gradients.hpp"
#include "qf/algorithm/optimizer.hpp"
#include "qf/backend/accelerator.hpp"
#include "qf/backend/annealer.hpp"
#include "qf/backend/buffer.hpp"
#include "qf/backend/remote.hpp"
#include "qf/backend/simulator.hpp"
#include "qf/backend/statevector.hpp"
#include "qf/foundation/framework.hpp"
#include "qf/foundation/het_map.hpp"
#include "qf/frontend/compiler.hpp"
#include "qf/frontend/directive.hpp"
#include "qf/ir/composite.hpp"
#include "qf/ir/serialize.hpp"
#include "qf/ir/transformation.hpp"
#include "qf/observable/fermion.hpp"
#include "qf/observable/pauli.hpp"

namespace qf {

[[nodiscard]] std::shared_ptr<frontend::Compiler> getCompiler(std::string_view name);
[[nodiscard]] std::shared_ptr<ir::IRProvider> getIRProvider(std::string_view name = "quantum");
[[nodiscard]] std::shared_ptr<ir::IRTransformation> getIRTransformation(std::string_view name);

/// Fresh observable of the given kind, optionally parsed from `text`.
[[nodiscard]] obs::ObservablePtr getObservable(std::string_view name, std::string_view text = {});

/// Runs a registered transformation; the input is left untouched.
[[nodiscard]] ir::Composite applyIRTransformation(std::string_view name,
                                                  const ir::Composite &circuit,
                                                  const HetMap &options = {});

/// Compiles directive-annotated source into the process-wide compilation database.
std::vector<std::string> qasm(std::string_view source);

/// Throws NameNotCompiled.
[[nodiscard]] ir::CompositePtr getCompiled(std::string_view name);
[[nodiscard]] bool hasCompiled(std::string_view name);

/// Empty buffer of `n` qubits; throws InvalidSize for zero.
[[nodiscard]] BufferPtr qalloc(std::size_t n, std::string name = "q");

/// Fresh accelerator configured with `options`.
[[nodiscard]] AcceleratorPtr getAccelerator(std::string_view name, const HetMap &options = {});

/**
 * Fresh optimizer with `options` applied. The name "nlopt" selects the optimizer named by the
 * "nlopt-optimizer" option ("nelder-mead" and "gd" are accepted spellings).
 */
[[nodiscard]] OptimizerPtr getOptimizer(std::string_view name, const HetMap &options = {});

/// Fresh, uninitialized algorithm.
[[nodiscard]] AlgorithmPtr getAlgorithm(std::string_view name);

/// Wraps `inner` in the named decorator; decorators can be chained.
[[nodiscard]] AcceleratorPtr decorate(std::string_view decorator, AcceleratorPtr inner,
                                      const HetMap &options = {});

} // namespace qf
