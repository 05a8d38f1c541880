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

#include <map>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "qf/foundation/het_map.hpp"
#include "qf/foundation/registry.hpp"
#include "qf/ir/graph.hpp"
#include "qf/ir/instruction.hpp"
#include "qf/ir/visitor.hpp"

namespace qf::ir {

class Composite;

/// A child slot of a composite: either a leaf instruction or an owned sub-composite.
class Node {
  public:
    Node(Instruction instruction);
    Node(Composite composite);
    Node(const Node &other);
    Node(Node &&other) noexcept;
    Node &operator=(const Node &other);
    Node &operator=(Node &&other) noexcept;
    ~Node();

    [[nodiscard]] bool isInstruction() const noexcept {
        return std::holds_alternative<Instruction>(value_);
    }
    [[nodiscard]] bool isComposite() const noexcept { return !isInstruction(); }

    [[nodiscard]] const Instruction &instruction() const { return std::get<Instruction>(value_); }
    [[nodiscard]] Instruction &instruction() { return std::get<Instruction>(value_); }
    [[nodiscard]] const Composite &composite() const;
    [[nodiscard]] Composite &composite();

    friend bool operator==(const Node &a, const Node &b);

  private:
    using Value = std::variant<Instruction, std::unique_ptr<Composite>>;
    Value value_;
};

/**
 * @brief Produces the children of a dynamic composite from options (range, qft, ...).
 */
class CircuitGenerator : public Service {
  public:
    static constexpr std::string_view kServiceKind = "composite-generator";

    /// Appends instructions to `target`. Returns false and sets `diagnostic` when the
    /// options are insufficient.
    virtual bool generate(Composite &target, const HetMap &options,
                          std::string &diagnostic) const = 0;
};

/**
 * @brief Named n-ary instruction tree with free variables.
 *
 * Children run in order. A composite may carry a generator, in which case its children are
 * produced by expand() and it cannot be evaluated before that.
 */
class Composite {
  public:
    explicit Composite(std::string name = {}, std::vector<std::string> variables = {});

    [[nodiscard]] const std::string &name() const noexcept { return name_; }
    void setName(std::string name) { name_ = std::move(name); }

    [[nodiscard]] const std::vector<std::string> &variables() const noexcept {
        return variables_;
    }
    /// Appends unless already declared.
    void addVariable(const std::string &variable);
    void setVariables(std::vector<std::string> variables) { variables_ = std::move(variables); }

    [[nodiscard]] const std::vector<Node> &children() const noexcept { return children_; }
    [[nodiscard]] std::vector<Node> &children() noexcept { return children_; }
    void addInstruction(Instruction instruction);
    void addInstructions(std::vector<Instruction> instructions);
    void addComposite(Composite composite);
    void clearChildren() noexcept { children_.clear(); }

    [[nodiscard]] HetMap &metadata() noexcept { return metadata_; }
    [[nodiscard]] const HetMap &metadata() const noexcept { return metadata_; }

    /// Leaf instructions in the whole tree, enabled or not.
    [[nodiscard]] std::size_t nInstructions() const noexcept;

    /// Flattened leaves in execution order.
    [[nodiscard]] std::vector<Instruction> instructions(bool enabledOnly = true) const;

    /// One past the highest qubit index used (0 for an empty tree).
    [[nodiscard]] std::size_t nQubits() const;

    [[nodiscard]] bool hasMeasurement() const;
    [[nodiscard]] bool hasAnnealing() const;
    [[nodiscard]] bool hasGates() const;

    /// Free variables referenced by any leaf, deduplicated in first-use order.
    [[nodiscard]] std::vector<std::string> symbols() const;

    /// Throws UnboundSymbol if a descendant references a variable some enclosing composite
    /// does not declare.
    void validate() const;

    /// Deep copy with every symbol substituted; |values| must equal |variables|.
    [[nodiscard]] Composite evaluate(std::span<const double> values) const;
    [[nodiscard]] Composite evaluate(const std::map<std::string, double, std::less<>> &values) const;

    [[nodiscard]] bool isDynamic() const noexcept { return generator_ != nullptr; }
    [[nodiscard]] bool isExpanded() const noexcept { return !generator_ || expanded_; }
    /// True when this composite or a descendant is dynamic and unexpanded.
    [[nodiscard]] bool needsExpansion() const;

    void setGenerator(std::shared_ptr<const CircuitGenerator> generator, HetMap options = {});
    [[nodiscard]] const HetMap &generatorOptions() const noexcept { return generatorOptions_; }

    /**
     * @brief Regenerates the children of a dynamic composite.
     *
     * `options` overrides the options given to setGenerator. Plain composites return true
     * without change. On false, diagnostic() explains what was missing.
     */
    bool expand(const HetMap &options = {});

    /// Expands every dynamic composite in the tree; false on the first failure.
    bool expandAll();

    [[nodiscard]] const std::string &diagnostic() const noexcept { return diagnostic_; }

    [[nodiscard]] InstrGraph toGraph() const { return buildGraph(instructions()); }

    /// Dispatches every enabled leaf in execution order.
    void accept(InstructionVisitor &visitor) const;

    /// Compares name, variables and children (metadata and generator are not compared).
    friend bool operator==(const Composite &a, const Composite &b);

  private:
    Composite evaluateWith(const VariableLookup &lookup) const;
    void collectInstructions(std::vector<Instruction> &out, bool enabledOnly) const;
    void validateWithin(std::vector<const std::vector<std::string> *> &scopes) const;

    std::string name_;
    std::vector<std::string> variables_;
    std::vector<Node> children_;
    HetMap metadata_;
    std::shared_ptr<const CircuitGenerator> generator_;
    HetMap generatorOptions_;
    bool expanded_ = false;
    std::string diagnostic_;
};

using CompositePtr = std::shared_ptr<Composite>;

/// Ordered forest of named composites.
class IRContainer {
  public:
    /// Replaces an existing composite of the same name in place.
    void addComposite(CompositePtr composite);
    void addComposite(Composite composite) {
        addComposite(std::make_shared<Composite>(std::move(composite)));
    }

    [[nodiscard]] bool hasComposite(std::string_view name) const;
    /// Throws KeyMissing.
    [[nodiscard]] CompositePtr getComposite(std::string_view name) const;
    [[nodiscard]] const std::vector<CompositePtr> &composites() const noexcept {
        return composites_;
    }
    [[nodiscard]] std::size_t size() const noexcept { return composites_.size(); }

    friend bool operator==(const IRContainer &a, const IRContainer &b);

  private:
    std::vector<CompositePtr> composites_;
};

} // namespace qf::ir
