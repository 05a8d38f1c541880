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

#include "qf/stdlib/generators.hpp"

#include <cmath>
#include <numbers>

#include "qf/observable/fermion.hpp"

namespace qf::stdlib {

using ir::Instruction;
using ir::OpKind;

std::optional<std::pair<std::size_t, std::size_t>> qubitRange(const HetMap &options,
                                                              std::string &diagnostic) {
    std::int64_t start = 0;
    std::int64_t end = 0;
    if (options.contains("nq")) {
        end = options.get<std::int64_t>("nq");
    } else if (options.contains("start") && options.contains("end")) {
        start = options.get<std::int64_t>("start");
        end = options.get<std::int64_t>("end");
    } else {
        diagnostic = "missing qubit range: give \"nq\" or \"start\" and \"end\"";
        return std::nullopt;
    }
    if (start < 0 || end <= start) {
        diagnostic = "empty qubit range [" + std::to_string(start) + ", " + std::to_string(end) + ")";
        return std::nullopt;
    }
    return std::make_pair(static_cast<std::size_t>(start), static_cast<std::size_t>(end));
}

std::optional<std::vector<Instruction>> expandRange(const HetMap &options,
                                                    std::string &diagnostic) {
    if (!options.contains("gate")) {
        diagnostic = "missing option \"gate\"";
        return std::nullopt;
    }
    auto gateName = options.get<std::string>("gate");
    auto kind = ir::lookupOp(gateName);
    if (!kind) {
        diagnostic = "unknown gate '" + gateName + "'";
        return std::nullopt;
    }
    const auto &info = ir::opInfo(*kind);
    if (info.nQubits != 1 || info.nParams != 0 || *kind == OpKind::Measure) {
        diagnostic = "range needs a one-qubit gate without parameters, got '" + gateName + "'";
        return std::nullopt;
    }
    auto range = qubitRange(options, diagnostic);
    if (!range) {
        return std::nullopt;
    }
    std::vector<Instruction> out;
    for (std::size_t q = range->first; q < range->second; ++q) {
        out.emplace_back(*kind, std::vector<std::size_t>{q});
    }
    return out;
}

std::optional<std::vector<Instruction>> expandQft(const HetMap &options,
                                                  std::string &diagnostic) {
    auto range = qubitRange(options, diagnostic);
    if (!range) {
        return std::nullopt;
    }
    auto [first, last] = *range;
    std::size_t n = last - first;
    std::vector<Instruction> out;
    for (std::size_t j = 0; j < n; ++j) {
        out.emplace_back(OpKind::H, std::vector<std::size_t>{first + j});
        for (std::size_t k = j + 1; k < n; ++k) {
            double angle = std::numbers::pi / std::ldexp(1.0, static_cast<int>(k - j));
            out.emplace_back(OpKind::CPhase, std::vector<std::size_t>{first + k, first + j},
                             std::vector<ir::InstrParam>{angle});
        }
    }
    for (std::size_t i = 0; i < n / 2; ++i) {
        out.emplace_back(OpKind::Swap, std::vector<std::size_t>{first + i, first + n - 1 - i});
    }
    return out;
}

std::vector<Instruction> expITheta(const obs::PauliOperator &generator,
                                   const std::string &variable) {
    std::vector<Instruction> out;
    bool anyTerm = false;
    for (const auto &[term, coefficient] : generator.terms()) {
        if (std::abs(coefficient.imag()) > 1e-12) {
            fail(ErrorCode::ComplexCoefficient,
                 "term " + term.key() + " has coefficient with imaginary part " +
                     ir::formatReal(coefficient.imag()));
        }
        if (term.isIdentity()) {
            continue;
        }
        anyTerm = true;
        std::vector<Instruction> basis;
        std::vector<Instruction> unbasis;
        for (const auto &[site, p] : term.ops) {
            if (p == 'X') {
                basis.emplace_back(OpKind::H, std::vector<std::size_t>{site});
                unbasis.emplace_back(OpKind::H, std::vector<std::size_t>{site});
            } else if (p == 'Y') {
                basis.emplace_back(OpKind::Rx, std::vector<std::size_t>{site},
                                   std::vector<ir::InstrParam>{std::numbers::pi / 2});
                unbasis.emplace_back(OpKind::Rx, std::vector<std::size_t>{site},
                                     std::vector<ir::InstrParam>{-std::numbers::pi / 2});
            }
        }
        std::vector<Instruction> ladder;
        for (std::size_t k = 0; k + 1 < term.ops.size(); ++k) {
            ladder.emplace_back(OpKind::CX, std::vector<std::size_t>{term.ops[k].first,
                                                                    term.ops[k + 1].first});
        }
        out.insert(out.end(), basis.begin(), basis.end());
        out.insert(out.end(), ladder.begin(), ladder.end());
        // exp(i c t Z) = Rz(-2 c t)
        ir::Affine angle{-2.0 * coefficient.real(), 0.0, variable};
        out.emplace_back(OpKind::Rz, std::vector<std::size_t>{term.ops.back().first},
                         std::vector<ir::InstrParam>{ir::ParamExpr::fromAffine(angle)});
        out.insert(out.end(), ladder.rbegin(), ladder.rend());
        out.insert(out.end(), unbasis.begin(), unbasis.end());
    }
    if (!anyTerm) {
        fail(ErrorCode::EmptyOperator, "exp_i_theta generator has no non-identity terms");
    }
    return out;
}

bool RangeGenerator::generate(ir::Composite &target, const HetMap &options,
                              std::string &diagnostic) const {
    auto instructions = expandRange(options, diagnostic);
    if (instructions) {
        target.addInstructions(std::move(*instructions));
    }
    return instructions.has_value();
}

bool QftGenerator::generate(ir::Composite &target, const HetMap &options,
                            std::string &diagnostic) const {
    auto instructions = expandQft(options, diagnostic);
    if (instructions) {
        target.addInstructions(std::move(*instructions));
    }
    return instructions.has_value();
}

bool ExpIThetaGenerator::generate(ir::Composite &target, const HetMap &options,
                                  std::string &diagnostic) const {
    if (target.variables().size() != 1) {
        diagnostic = "exp_i_theta takes exactly one variable, composite declares " +
                     std::to_string(target.variables().size());
        return false;
    }
    obs::PauliOperator generator;
    if (options.contains("pauli")) {
        generator = obs::PauliOperator::parse(options.get<std::string>("pauli"));
    } else if (options.contains("fermion")) {
        generator = obs::jordanWigner(obs::FermionOperator::parse(options.get<std::string>("fermion")));
    } else {
        diagnostic = "missing option \"pauli\" or \"fermion\"";
        return false;
    }
    target.addInstructions(expITheta(generator, target.variables().front()));
    return true;
}

} // namespace qf::stdlib
