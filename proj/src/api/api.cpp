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

#include "qf/qf.hpp"

namespace qf {

namespace {

frontend::CompilationDB &database() {
    static frontend::CompilationDB db;
    return db;
}

} // namespace

void resetApiState() { database().clear(); }

std::shared_ptr<frontend::Compiler> getCompiler(std::string_view name) {
    return getService<frontend::Compiler>(name);
}

std::shared_ptr<ir::IRProvider> getIRProvider(std::string_view name) {
    return getService<ir::IRProvider>(name);
}

std::shared_ptr<ir::IRTransformation> getIRTransformation(std::string_view name) {
    return getService<ir::IRTransformation>(name);
}

obs::ObservablePtr getObservable(std::string_view name, std::string_view text) {
    auto observable = getService<obs::Observable>(name);
    if (!text.empty()) {
        observable->fromString(text);
    }
    return observable;
}

ir::Composite applyIRTransformation(std::string_view name, const ir::Composite &circuit,
                                    const HetMap &options) {
    return getIRTransformation(name)->transform(circuit, options);
}

std::vector<std::string> qasm(std::string_view source) {
    return frontend::compileDirectives(source, database(), [](std::string_view name) {
        return getCompiler(name);
    });
}

ir::CompositePtr getCompiled(std::string_view name) { return database().get(name); }

bool hasCompiled(std::string_view name) { return database().contains(name); }

BufferPtr qalloc(std::size_t n, std::string name) {
    return std::make_shared<QuantumBuffer>(n, std::move(name));
}

AcceleratorPtr getAccelerator(std::string_view name, const HetMap &options) {
    auto accelerator = getService<Accelerator>(name);
    accelerator->updateConfiguration(options);
    return accelerator;
}

AcceleratorPtr decorate(std::string_view decorator, AcceleratorPtr inner, const HetMap &options) {
    auto wrapper = getService<AcceleratorDecorator>(decorator);
    wrapper->setDecorated(std::move(inner));
    if (!options.empty()) {
        wrapper->updateConfiguration(options);
    }
    return wrapper;
}

} // namespace qf

namespace qf {

OptimizerPtr getOptimizer(std::string_view name, const HetMap &options) {
    std::string resolved(name);
    if (resolved == "nlopt") {
        resolved = options.getOr<std::string>("nlopt-optimizer", "neldermead");
        if (resolved == "nelder-mead") {
            resolved = "neldermead";
        } else if (resolved == "gd") {
            resolved = "gd-paramshift";
        }
    }
    auto optimizer = getService<Optimizer>(resolved);
    optimizer->setOptions(options);
    return optimizer;
}

AlgorithmPtr getAlgorithm(std::string_view name) { return getService<Algorithm>(name); }

} // namespace qf
