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

#include "qf/stdlib/gates.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace qf::stdlib {

using ir::Instruction;
using ir::InstrParam;
using ir::OpKind;

namespace {

constexpr Complex kI{0.0, 1.0};

CMatrix phase(Complex a, Complex b) { return {{a, 0.0}, {0.0, b}}; }

CMatrix diag4(Complex d) {
    CMatrix m = CMatrix::identity(4);
    m(3, 3) = d;
    return m;
}

} // namespace

CMatrix gateUnitary(OpKind kind, std::span<const double> params) {
    const auto &info = ir::opInfo(kind);
    if (kind == OpKind::Measure || kind == OpKind::Qmi) {
        fail(ErrorCode::UnknownInstruction, std::string(info.name) + " has no unitary");
    }
    if (params.size() != info.nParams) {
        fail(ErrorCode::ArityMismatch, std::string(info.name) + " takes " +
                                           std::to_string(info.nParams) + " parameter(s)");
    }
    const double s2 = std::numbers::sqrt2 / 2.0;
    switch (kind) {
    case OpKind::I:
        return CMatrix::identity(2);
    case OpKind::X:
        return {{0.0, 1.0}, {1.0, 0.0}};
    case OpKind::Y:
        return {{0.0, -kI}, {kI, 0.0}};
    case OpKind::Z:
        return phase(1.0, -1.0);
    case OpKind::H:
        return {{s2, s2}, {s2, -s2}};
    case OpKind::S:
        return phase(1.0, kI);
    case OpKind::Sdg:
        return phase(1.0, -kI);
    case OpKind::T:
        return phase(1.0, std::polar(1.0, std::numbers::pi / 4));
    case OpKind::Tdg:
        return phase(1.0, std::polar(1.0, -std::numbers::pi / 4));
    case OpKind::Rx: {
        double c = std::cos(params[0] / 2);
        double s = std::sin(params[0] / 2);
        return {{c, -kI * s}, {-kI * s, c}};
    }
    case OpKind::Ry: {
        double c = std::cos(params[0] / 2);
        double s = std::sin(params[0] / 2);
        return {{c, -s}, {s, c}};
    }
    case OpKind::Rz:
        return phase(std::polar(1.0, -params[0] / 2), std::polar(1.0, params[0] / 2));
    case OpKind::U: {
        double c = std::cos(params[0] / 2);
        double s = std::sin(params[0] / 2);
        double phi = params[1];
        double lambda = params[2];
        return {{c, -s * std::polar(1.0, lambda)},
                {s * std::polar(1.0, phi), c * std::polar(1.0, phi + lambda)}};
    }
    case OpKind::CX:
        return {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 0, 1}, {0, 0, 1, 0}};
    case OpKind::CZ:
        return diag4(-1.0);
    case OpKind::CPhase:
        return diag4(std::polar(1.0, params[0]));
    case OpKind::Swap:
        return {{1, 0, 0, 0}, {0, 0, 1, 0}, {0, 1, 0, 0}, {0, 0, 0, 1}};
    case OpKind::Measure:
    case OpKind::Qmi:
        break;
    }
    fail(ErrorCode::UnknownInstruction, std::string(info.name));
}

CMatrix gateUnitary(std::string_view name, std::span<const double> params) {
    auto kind = ir::lookupOp(name);
    if (!kind) {
        fail(ErrorCode::UnknownInstruction, std::string(name));
    }
    return gateUnitary(*kind, params);
}

CMatrix gateUnitary(const Instruction &instruction) {
    auto params = instruction.numericParams();
    return gateUnitary(instruction.kind(), params);
}

std::vector<OpKind> gateKinds() {
    std::vector<OpKind> out;
    for (const auto &info : ir::opCatalog()) {
        if (info.kind != OpKind::Measure && !info.annealing) {
            out.push_back(info.kind);
        }
    }
    return out;
}

InstrParam scaleParam(const InstrParam &p, double factor) {
    if (const auto *e = std::get_if<ir::ParamExpr>(&p)) {
        ir::Affine a = e->affine();
        a.scale *= factor;
        a.offset *= factor;
        return ir::ParamExpr::fromAffine(a);
    }
    return ir::numericValue(p) * factor;
}

std::vector<Instruction> lowerInstruction(const Instruction &instruction,
                                          std::span<const OpKind> allowed) {
    auto supports = [&](OpKind k) {
        return std::find(allowed.begin(), allowed.end(), k) != allowed.end();
    };
    if (supports(instruction.kind())) {
        return {instruction};
    }
    const auto &bits = instruction.bits();
    auto u1 = [](std::size_t q, InstrParam lambda) {
        return Instruction(OpKind::U, {q}, {0.0, 0.0, std::move(lambda)});
    };
    std::vector<Instruction> out;
    switch (instruction.kind()) {
    case OpKind::I:
        out = {u1(bits[0], 0.0)};
        break;
    case OpKind::Sdg:
        out = {u1(bits[0], -std::numbers::pi / 2)};
        break;
    case OpKind::Tdg:
        out = {u1(bits[0], -std::numbers::pi / 4)};
        break;
    case OpKind::S:
        out = {u1(bits[0], std::numbers::pi / 2)};
        break;
    case OpKind::T:
        out = {u1(bits[0], std::numbers::pi / 4)};
        break;
    case OpKind::Swap:
        out = {Instruction(OpKind::CX, {bits[0], bits[1]}),
               Instruction(OpKind::CX, {bits[1], bits[0]}),
               Instruction(OpKind::CX, {bits[0], bits[1]})};
        break;
    case OpKind::CPhase: {
        const auto &lambda = instruction.params()[0];
        out = {u1(bits[0], scaleParam(lambda, 0.5)), Instruction(OpKind::CX, {bits[0], bits[1]}),
               u1(bits[1], scaleParam(lambda, -0.5)), Instruction(OpKind::CX, {bits[0], bits[1]}),
               u1(bits[1], scaleParam(lambda, 0.5))};
        break;
    }
    default:
        return {};
    }
    bool expressible = std::all_of(out.begin(), out.end(),
                                   [&](const Instruction &i) { return supports(i.kind()); });
    if (!expressible) {
        return {};
    }
    for (auto &i : out) {
        i.setEnabled(instruction.enabled());
    }
    return out;
}

} // namespace qf::stdlib
