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

#include "qf/algorithm/algorithm.hpp"
#include "qf/backend/accelerator.hpp"
#include "qf/backend/annealer.hpp"
#include "qf/backend/remote.hpp"
#include "qf/backend/simulator.hpp"
#include "qf/foundation/framework.hpp"
#include "qf/frontend/dialects.hpp"
#include "qf/ir/transformation.hpp"
#include "qf/observable/fermion.hpp"
#include "qf/observable/pauli.hpp"
#include "qf/stdlib/generators.hpp"
#include "qf/stdlib/routing.hpp"

namespace qf {

void registerBuiltinServices(ServiceRegistry &registry) {
    registry.add<frontend::XasmCompiler>("xasm");
    registry.add<frontend::QuilCompiler>("quil");
    registry.add<frontend::OpenQasmCompiler>("openqasm");

    registry.add<ir::QuantumIRProvider>("quantum");
    registry.add<ir::IdentityTransformation>("identity");
    registry.add<stdlib::SwapRouting>("swap-routing");

    registry.add<stdlib::RangeGenerator>("range");
    registry.add<stdlib::QftGenerator>("qft");
    registry.add<stdlib::ExpIThetaGenerator>("exp_i_theta");

    registry.add<obs::PauliOperator>("pauli");
    registry.add<obs::FermionOperator>("fermion");
    registry.add<obs::JordanWignerTransform>("jordan-wigner");

    registry.add<StatevectorSimulator>("sim");
    registry.add<Annealer>("anneal");
    registry.add<RemoteAccelerator>("remote");
    registry.add<IdentityDecorator>("identity");
    registry.add<ReadoutErrorDecorator>("ro-error");

    registry.add<NelderMead>("neldermead");
    registry.add<GradientDescent>("gd-paramshift");
    registry.add<Vqe>("vqe");
    registry.add<Ddcl>("ddcl");
}

} // namespace qf
