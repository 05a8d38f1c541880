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

#include "qf/foundation/het_map.hpp"

namespace qf {

std::string_view toString(HetKind kind) noexcept {
    switch (kind) {
    case HetKind::Integer: return "integer";
    case HetKind::Real: return "real";
    case HetKind::Boolean: return "boolean";
    case HetKind::Text: return "text";
    case HetKind::RealList: return "list-of-real";
    case HetKind::IntegerList: return "list-of-integer";
    case HetKind::TextList: return "list-of-text";
    case HetKind::PairList: return "pair-list";
    case HetKind::Handle: return "opaque-handle";
    }
    return "unknown";
}

void throwVariantMismatch(std::string_view key, HetKind stored, HetKind requested) {
    fail(ErrorCode::VariantMismatch, std::string(key) + " holds " + std::string(toString(stored)) +
                                         ", requested " + std::string(toString(requested)));
}

std::optional<HetValue> HetMap::insert(std::string key, HetValue value) {
    auto it = entries_.find(key);
    if (it == entries_.end()) {
        entries_.emplace(std::move(key), std::move(value));
        return std::nullopt;
    }
    auto previous = std::move(it->second);
    it->second = std::move(value);
    return previous;
}

const HetValue &HetMap::at(std::string_view key) const {
    auto it = entries_.find(key);
    if (it == entries_.end()) {
        fail(ErrorCode::KeyMissing, std::string(key));
    }
    return it->second;
}

bool HetMap::erase(std::string_view key) {
    auto it = entries_.find(key);
    if (it == entries_.end()) {
        return false;
    }
    entries_.erase(it);
    return true;
}

void HetMap::merge(const HetMap &other) {
    for (const auto &[key, value] : other) {
        insert(key, value);
    }
}

} // namespace qf
