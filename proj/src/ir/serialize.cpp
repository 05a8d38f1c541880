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

#include "qf/ir/serialize.hpp"

#include <nlohmann/json.hpp>

namespace qf::ir {

namespace {

using nlohmann::json;

json paramToJson(const InstrParam &p) {
    return std::visit(
        [](const auto &v) -> json {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, std::int64_t>) {
                return {{"t", "int"}, {"v", v}};
            } else if constexpr (std::is_same_v<T, double>) {
                return {{"t", "real"}, {"v", v}};
            } else if constexpr (std::is_same_v<T, ParamExpr>) {
                return {{"t", "sym"}, {"v", v.text}};
            } else {
                return {{"t", "txt"}, {"v", v.value}};
            }
        },
        p);
}

json compositeToJson(const Composite &c) {
    json children = json::array();
    for (const auto &child : c.children()) {
        if (child.isComposite()) {
            children.push_back(compositeToJson(child.composite()));
            continue;
        }
        const auto &inst = child.instruction();
        json params = json::array();
        for (const auto &p : inst.params()) {
            params.push_back(paramToJson(p));
        }
        json node = {{"kind", "instruction"},
                     {"name", inst.name()},
                     {"bits", inst.bits()},
                     {"params", params},
                     {"enabled", inst.enabled()}};
        if (!inst.cbits().empty()) {
            node["cbits"] = inst.cbits();
        }
        children.push_back(std::move(node));
    }
    return {{"kind", "composite"},
            {"name", c.name()},
            {"variables", c.variables()},
            {"children", std::move(children)}};
}

[[noreturn]] void schemaError(const std::string &path, const std::string &message) {
    throw SourceError(ErrorCode::ParseError, 1, 1, path + ": " + message);
}

const json &field(const json &obj, const char *key, json::value_t type, const std::string &path) {
    if (!obj.is_object()) {
        schemaError(path, "expected an object");
    }
    auto it = obj.find(key);
    if (it == obj.end()) {
        schemaError(path, std::string("missing '") + key + "'");
    }
    bool ok = it->type() == type ||
              (type == json::value_t::number_unsigned && it->is_number_integer() &&
               it->get<std::int64_t>() >= 0);
    if (!ok) {
        schemaError(path + "." + key, std::string("expected ") + json(type).type_name() +
                                          ", found " + it->type_name());
    }
    return *it;
}

std::vector<std::size_t> indexList(const json &arr, const std::string &path) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < arr.size(); ++i) {
        if (!arr[i].is_number_integer() || arr[i].get<std::int64_t>() < 0) {
            schemaError(path + "[" + std::to_string(i) + "]", "expected a non-negative integer");
        }
        out.push_back(arr[i].get<std::size_t>());
    }
    return out;
}

InstrParam paramFromJson(const json &j, const std::string &path) {
    const auto &tag = field(j, "t", json::value_t::string, path).get_ref<const std::string &>();
    if (!j.contains("v")) {
        schemaError(path, "missing 'v'");
    }
    const json &v = j["v"];
    if (tag == "int" && v.is_number_integer()) {
        return v.get<std::int64_t>();
    }
    if (tag == "real" && v.is_number()) {
        return v.get<double>();
    }
    if (tag == "sym" && v.is_string()) {
        return ParamExpr::parse(v.get<std::string>());
    }
    if (tag == "txt" && v.is_string()) {
        return TextParam{v.get<std::string>()};
    }
    schemaError(path, "bad parameter of type '" + tag + "'");
}

Instruction instructionFromJson(const json &j, const std::string &path) {
    const auto &name = field(j, "name", json::value_t::string, path).get_ref<const std::string &>();
    auto kind = lookupOp(name);
    if (!kind) {
        schemaError(path, "unknown instruction '" + name + "'");
    }
    auto bits = indexList(field(j, "bits", json::value_t::array, path), path + ".bits");
    const auto &paramsJson = field(j, "params", json::value_t::array, path);
    std::vector<InstrParam> params;
    for (std::size_t i = 0; i < paramsJson.size(); ++i) {
        params.push_back(paramFromJson(paramsJson[i], path + ".params[" + std::to_string(i) + "]"));
    }
    const auto &info = opInfo(*kind);
    if (bits.size() != info.nQubits || params.size() != info.nParams) {
        schemaError(path, "arity mismatch for " + name);
    }
    std::vector<std::size_t> cbits;
    if (j.contains("cbits")) {
        cbits = indexList(field(j, "cbits", json::value_t::array, path), path + ".cbits");
    }
    Instruction inst(*kind, std::move(bits), std::move(params), std::move(cbits));
    inst.setEnabled(field(j, "enabled", json::value_t::boolean, path).get<bool>());
    return inst;
}

Composite compositeFromJson(const json &j, const std::string &path) {
    if (field(j, "kind", json::value_t::string, path) != "composite") {
        schemaError(path, "expected kind 'composite'");
    }
    Composite c(field(j, "name", json::value_t::string, path).get<std::string>());
    for (const auto &v : field(j, "variables", json::value_t::array, path)) {
        if (!v.is_string()) {
            schemaError(path + ".variables", "expected strings");
        }
        c.addVariable(v.get<std::string>());
    }
    const auto &children = field(j, "children", json::value_t::array, path);
    for (std::size_t i = 0; i < children.size(); ++i) {
        std::string childPath = path + ".children[" + std::to_string(i) + "]";
        const auto &kind = field(children[i], "kind", json::value_t::string, childPath);
        if (kind == "composite") {
            c.addComposite(compositeFromJson(children[i], childPath));
        } else if (kind == "instruction") {
            c.addInstruction(instructionFromJson(children[i], childPath));
        } else {
            schemaError(childPath, "unknown kind '" + kind.get<std::string>() + "'");
        }
    }
    return c;
}

json parseText(std::string_view text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error &e) {
        std::size_t offset = e.byte == 0 ? 0 : e.byte - 1;
        std::size_t line = 1;
        std::size_t column = 1;
        for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
            if (text[i] == '\n') {
                ++line;
                column = 1;
            } else {
                ++column;
            }
        }
        throw SourceError(ErrorCode::ParseError, line, column, "malformed JSON");
    }
}

} // namespace

std::string serializeIR(const IRContainer &ir, int indent) {
    json composites = json::array();
    for (const auto &c : ir.composites()) {
        composites.push_back(compositeToJson(*c));
    }
    return json{{"composites", std::move(composites)}}.dump(indent);
}

IRContainer deserializeIR(std::string_view text) {
    json root = parseText(text);
    IRContainer ir;
    const auto &composites = field(root, "composites", json::value_t::array, "$");
    for (std::size_t i = 0; i < composites.size(); ++i) {
        ir.addComposite(compositeFromJson(composites[i], "composites[" + std::to_string(i) + "]"));
    }
    return ir;
}

std::string serializeComposite(const Composite &composite, int indent) {
    return compositeToJson(composite).dump(indent);
}

Composite deserializeComposite(std::string_view text) {
    return compositeFromJson(parseText(text), "$");
}

} // namespace qf::ir
