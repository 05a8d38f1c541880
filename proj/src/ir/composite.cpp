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

#include "qf/ir/composite.hpp"

#include <algorithm>

namespace qf::ir {

Node::Node(Instruction instruction) : value_(std::move(instruction)) {}

Node::Node(Composite composite) : value_(std::make_unique<Composite>(std::move(composite))) {}

Node::Node(const Node &other)
    : value_(other.isInstruction() ? Value(other.instruction())
                                   : Value(std::make_unique<Composite>(other.composite()))) {}

Node::Node(Node &&other) noexcept = default;

Node &Node::operator=(const Node &other) {
    if (this != &other) {
        Node copy(other);
        *this = std::move(copy);
    }
    return *this;
}

Node &Node::operator=(Node &&other) noexcept = default;

Node::~Node() = default;

const Composite &Node::composite() const { return *std::get<std::unique_ptr<Composite>>(value_); }

Composite &Node::composite() { return *std::get<std::unique_ptr<Composite>>(value_); }

bool operator==(const Node &a, const Node &b) {
    if (a.isInstruction() != b.isInstruction()) {
        return false;
    }
    return a.isInstruction() ? a.instruction() == b.instruction()
                             : a.composite() == b.composite();
}

Composite::Composite(std::string name, std::vector<std::string> variables)
    : name_(std::move(name)), variables_(std::move(variables)) {}

void Composite::addVariable(const std::string &variable) {
    if (std::find(variables_.begin(), variables_.end(), variable) == variables_.end()) {
        variables_.push_back(variable);
    }
}

void Composite::addInstruction(Instruction instruction) {
    children_.emplace_back(std::move(instruction));
}

void Composite::addInstructions(std::vector<Instruction> instructions) {
    for (auto &inst : instructions) {
        children_.emplace_back(std::move(inst));
    }
}

void Composite::addComposite(Composite composite) { children_.emplace_back(std::move(composite)); }

std::size_t Composite::nInstructions() const noexcept {
    std::size_t count = 0;
    for (const auto &child : children_) {
        count += child.isInstruction() ? 1 : child.composite().nInstructions();
    }
    return count;
}

void Composite::collectInstructions(std::vector<Instruction> &out, bool enabledOnly) const {
    for (const auto &child : children_) {
        if (child.isComposite()) {
            child.composite().collectInstructions(out, enabledOnly);
        } else if (!enabledOnly || child.instruction().enabled()) {
            out.push_back(child.instruction());
        }
    }
}

std::vector<Instruction> Composite::instructions(bool enabledOnly) const {
    std::vector<Instruction> out;
    collectInstructions(out, enabledOnly);
    return out;
}

std::size_t Composite::nQubits() const {
    std::size_t n = 0;
    for (const auto &inst : instructions(false)) {
        for (auto b : inst.bits()) {
            n = std::max(n, b + 1);
        }
    }
    return n;
}

bool Composite::hasMeasurement() const {
    auto all = instructions();
    return std::any_of(all.begin(), all.end(), [](const Instruction &i) { return i.isMeasure(); });
}

bool Composite::hasAnnealing() const {
    auto all = instructions();
    return std::any_of(all.begin(), all.end(),
                       [](const Instruction &i) { return i.isAnnealing(); });
}

bool Composite::hasGates() const {
    auto all = instructions();
    return std::any_of(all.begin(), all.end(),
                       [](const Instruction &i) { return !i.isAnnealing(); });
}

std::vector<std::string> Composite::symbols() const {
    std::vector<std::string> out;
    for (const auto &inst : instructions(false)) {
        for (auto &s : inst.symbols()) {
            if (std::find(out.begin(), out.end(), s) == out.end()) {
                out.push_back(std::move(s));
            }
        }
    }
    return out;
}

void Composite::validateWithin(std::vector<const std::vector<std::string> *> &scopes) const {
    scopes.push_back(&variables_);
    for (const auto &child : children_) {
        if (child.isComposite()) {
            child.composite().validateWithin(scopes);
            continue;
        }
        for (const auto &symbol : child.instruction().symbols()) {
            for (const auto *scope : scopes) {
                if (std::find(scope->begin(), scope->end(), symbol) == scope->end()) {
                    scopes.pop_back();
                    fail(ErrorCode::UnboundSymbol, "'" + symbol + "' used in " +
                                                       child.instruction().toString() +
                                                       " is not declared by an enclosing composite");
                }
            }
        }
    }
    scopes.pop_back();
}

void Composite::validate() const {
    std::vector<const std::vector<std::string> *> scopes;
    validateWithin(scopes);
}

Composite Composite::evaluateWith(const VariableLookup &lookup) const {
    if (!isExpanded()) {
        fail(ErrorCode::UnexpandedComposite, "'" + name_ + "' must be expanded before evaluation");
    }
    Composite out(name_);
    out.metadata_ = metadata_;
    out.children_.reserve(children_.size());
    for (const auto &child : children_) {
        if (child.isComposite()) {
            out.children_.emplace_back(child.composite().evaluateWith(lookup));
        } else {
            out.children_.emplace_back(child.instruction().evaluate(lookup));
        }
    }
    return out;
}

Composite Composite::evaluate(std::span<const double> values) const {
    if (values.size() != variables_.size()) {
        fail(ErrorCode::ArityMismatch, "'" + name_ + "' has " +
                                           std::to_string(variables_.size()) +
                                           " variable(s), got " + std::to_string(values.size()) +
                                           " value(s)");
    }
    return evaluateWith([&](std::string_view name) -> std::optional<double> {
        for (std::size_t i = 0; i < variables_.size(); ++i) {
            if (variables_[i] == name) {
                return values[i];
            }
        }
        return std::nullopt;
    });
}

Composite Composite::evaluate(const std::map<std::string, double, std::less<>> &values) const {
    return evaluateWith([&](std::string_view name) -> std::optional<double> {
        auto it = values.find(name);
        if (it == values.end()) {
            return std::nullopt;
        }
        return it->second;
    });
}

bool Composite::needsExpansion() const {
    if (!isExpanded()) {
        return true;
    }
    return std::any_of(children_.begin(), children_.end(), [](const Node &child) {
        return child.isComposite() && child.composite().needsExpansion();
    });
}

void Composite::setGenerator(std::shared_ptr<const CircuitGenerator> generator, HetMap options) {
    generator_ = std::move(generator);
    generatorOptions_ = std::move(options);
    expanded_ = false;
}

bool Composite::expand(const HetMap &options) {
    diagnostic_.clear();
    if (!generator_) {
        return true;
    }
    HetMap merged = generatorOptions_;
    merged.merge(options);
    children_.clear();
    expanded_ = generator_->generate(*this, merged, diagnostic_);
    if (expanded_) {
        generatorOptions_ = std::move(merged);
    } else {
        children_.clear();
    }
    return expanded_;
}

bool Composite::expandAll() {
    if (!isExpanded() && !expand()) {
        return false;
    }
    for (auto &child : children_) {
        if (child.isComposite() && !child.composite().expandAll()) {
            diagnostic_ = child.composite().diagnostic();
            return false;
        }
    }
    return true;
}

void Composite::accept(InstructionVisitor &visitor) const {
    for (const auto &child : children_) {
        if (child.isComposite()) {
            child.composite().accept(visitor);
        } else if (child.instruction().enabled()) {
            dispatch(child.instruction(), visitor);
        }
    }
}

bool operator==(const Composite &a, const Composite &b) {
    return a.name_ == b.name_ && a.variables_ == b.variables_ && a.children_ == b.children_;
}

void IRContainer::addComposite(CompositePtr composite) {
    for (auto &existing : composites_) {
        if (existing->name() == composite->name()) {
            existing = std::move(composite);
            return;
        }
    }
    composites_.push_back(std::move(composite));
}

bool IRContainer::hasComposite(std::string_view name) const {
    return std::any_of(composites_.begin(), composites_.end(),
                       [&](const CompositePtr &c) { return c->name() == name; });
}

CompositePtr IRContainer::getComposite(std::string_view name) const {
    for (const auto &c : composites_) {
        if (c->name() == name) {
            return c;
        }
    }
    fail(ErrorCode::KeyMissing, "no composite named '" + std::string(name) + "'");
}

bool operator==(const IRContainer &a, const IRContainer &b) {
    return std::equal(a.composites_.begin(), a.composites_.end(), b.composites_.begin(),
                      b.composites_.end(),
                      [](const CompositePtr &x, const CompositePtr &y) { return *x == *y; });
}

} // namespace qf::ir
