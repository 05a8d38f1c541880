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

#include "qf/ir/instruction.hpp"

#include <algorithm>
#include <array>
#include <cctype>

namespace qf::ir {

namespace {

constexpr std::array<OpInfo, 19> kCatalog = {{
    {OpKind::I, "I", 1, 0},
    {OpKind::X, "X", 1, 0},
    {OpKind::Y, "Y", 1, 0},
    {OpKind::Z, "Z", 1, 0},
    {OpKind::H, "H", 1, 0},
    {OpKind::S, "S", 1, 0},
    {OpKind::Sdg, "Sdg", 1, 0},
    {OpKind::T, "T", 1, 0},
    {OpKind::Tdg, "Tdg", 1, 0},
    {OpKind::Rx, "Rx", 1, 1},
    {OpKind::Ry, "Ry", 1, 1},
    {OpKind::Rz, "Rz", 1, 1},
    {OpKind::U, "U", 1, 3},
    {OpKind::CX, "CX", 2, 0},
    {OpKind::CZ, "CZ", 2, 0},
    {OpKind::CPhase, "CPhase", 2, 1},
    {OpKind::Swap, "Swap", 2, 0},
    {OpKind::Measure, "Measure", 1, 0},
    {OpKind::Qmi, "qmi", 2, 1, true},
}};

struct Alias {
    std::string_view spelling;
    OpKind kind;
};

constexpr std::array<Alias, 4> kAliases = {{
    {"cnot", OpKind::CX},
    {"u3", OpKind::U},
    {"cp", OpKind::CPhase},
    {"s_dag", OpKind::Sdg},
}};

bool equalsIgnoreCase(std::string_view a, std::string_view b) {
    return a.size() == b.size() &&
           std::equal(a.begin(), a.end(), b.begin(), [](char x, char y) {
               return std::tolower(static_cast<unsigned char>(x)) ==
                      std::tolower(static_cast<unsigned char>(y));
           });
}

} // namespace

const OpInfo &opInfo(OpKind kind) noexcept { return kCatalog[static_cast<std::size_t>(kind)]; }

std::span<const OpInfo> opCatalog() noexcept { return kCatalog; }

std::optional<OpKind> lookupOp(std::string_view name) noexcept {
    for (const auto &info : kCatalog) {
        if (equalsIgnoreCase(info.name, name)) {
            return info.kind;
        }
    }
    for (const auto &alias : kAliases) {
        if (equalsIgnoreCase(alias.spelling, name)) {
            return alias.kind;
        }
    }
    return std::nullopt;
}

double numericValue(const InstrParam &p) {
    if (const auto *i = std::get_if<std::int64_t>(&p)) {
        return static_cast<double>(*i);
    }
    if (const auto *d = std::get_if<double>(&p)) {
        return *d;
    }
    if (const auto *e = std::get_if<ParamExpr>(&p)) {
        fail(ErrorCode::SymbolicProgram, "parameter '" + e->text + "' is not bound");
    }
    fail(ErrorCode::SymbolicProgram,
         "text parameter '" + std::get<TextParam>(p).value + "' has no numeric value");
}

std::string toString(const InstrParam &p) {
    return std::visit(
        [](const auto &v) -> std::string {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, std::int64_t>) {
                return std::to_string(v);
            } else if constexpr (std::is_same_v<T, double>) {
                return formatReal(v);
            } else if constexpr (std::is_same_v<T, ParamExpr>) {
                return v.text;
            } else {
                return "\"" + v.value + "\"";
            }
        },
        p);
}

Instruction::Instruction(OpKind kind, std::vector<std::size_t> bits,
                         std::vector<InstrParam> params, std::vector<std::size_t> cbits)
    : kind_(kind), bits_(std::move(bits)), params_(std::move(params)), cbits_(std::move(cbits)) {
    if (kind_ == OpKind::Qmi && bits_.size() == 2 && bits_[0] > bits_[1]) {
        std::swap(bits_[0], bits_[1]);
    }
    if (kind_ == OpKind::Measure && cbits_.empty()) {
        cbits_ = bits_;
    }
}

void Instruction::setBits(std::vector<std::size_t> bits) {
    if (bits.size() != opInfo(kind_).nQubits) {
        fail(ErrorCode::ArityMismatch, std::string(name()) + " takes " +
                                           std::to_string(opInfo(kind_).nQubits) + " qubit(s)");
    }
    bool remapCbits = isMeasure() && cbits_ == bits_;
    bits_ = std::move(bits);
    if (kind_ == OpKind::Qmi && bits_[0] > bits_[1]) {
        std::swap(bits_[0], bits_[1]);
    }
    if (remapCbits) {
        cbits_ = bits_;
    }
}

void Instruction::setParam(std::size_t index, InstrParam value) {
    if (index >= params_.size()) {
        fail(ErrorCode::ArityMismatch, std::string(name()) + " has no parameter " +
                                           std::to_string(index));
    }
    params_[index] = std::move(value);
}

bool Instruction::isParameterized() const noexcept {
    return std::any_of(params_.begin(), params_.end(), isSymbolic);
}

std::vector<std::string> Instruction::symbols() const {
    std::vector<std::string> out;
    for (const auto &p : params_) {
        if (const auto *e = std::get_if<ParamExpr>(&p)) {
            out.push_back(e->variable);
        }
    }
    return out;
}

Instruction Instruction::evaluate(const VariableLookup &lookup) const {
    Instruction out = *this;
    for (auto &p : out.params_) {
        if (const auto *e = std::get_if<ParamExpr>(&p)) {
            auto value = lookup(e->variable);
            if (!value) {
                fail(ErrorCode::UnboundSymbol, "'" + e->variable + "' in " + toString() +
                                                   " is not a declared variable");
            }
            p = e->evaluate(*value);
        }
    }
    return out;
}

std::vector<double> Instruction::numericParams() const {
    std::vector<double> out;
    out.reserve(params_.size());
    for (const auto &p : params_) {
        out.push_back(numericValue(p));
    }
    return out;
}

std::string Instruction::toString() const {
    std::string out(name());
    out += '(';
    bool first = true;
    for (auto b : bits_) {
        out += first ? "" : ", ";
        out += "q" + std::to_string(b);
        first = false;
    }
    for (const auto &p : params_) {
        out += first ? "" : ", ";
        out += ir::toString(p);
        first = false;
    }
    out += ')';
    return out;
}

Instruction createInstruction(std::string_view name, std::vector<std::size_t> bits,
                              std::vector<InstrParam> params) {
    auto kind = lookupOp(name);
    if (!kind) {
        fail(ErrorCode::UnknownInstruction, std::string(name));
    }
    const auto &info = opInfo(*kind);
    if (bits.size() != info.nQubits || params.size() != info.nParams) {
        fail(ErrorCode::ArityMismatch,
             std::string(info.name) + " expects " + std::to_string(info.nQubits) +
                 " qubit(s) and " + std::to_string(info.nParams) + " parameter(s), got " +
                 std::to_string(bits.size()) + " and " + std::to_string(params.size()));
    }
    if (info.nQubits == 2 && !info.annealing && bits[0] == bits[1]) {
        fail(ErrorCode::ArityMismatch, std::string(info.name) + " needs two distinct qubits");
    }
    return Instruction(*kind, std::move(bits), std::move(params));
}

} // namespace qf::ir
