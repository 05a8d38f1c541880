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

#include <cstdint>
#include <initializer_list>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <type_traits>
#include <typeindex>
#include <utility>
#include <variant>
#include <vector>

#include "qf/foundation/error.hpp"

namespace qf {

using PairList = std::vector<std::pair<std::string, std::string>>;

/**
 * @brief Type-checked reference to a shared domain object (observable, optimizer, ...).
 *
 * The static type used at insertion is recorded; retrieval must ask for the same type.
 * Insert interface pointers (`std::shared_ptr<Accelerator>`), not concrete ones.
 */
class Handle {
  public:
    template <class T>
    explicit Handle(std::shared_ptr<T> object)
        : object_(std::move(object)), type_(typeid(T)) {}

    template <class T> [[nodiscard]] std::shared_ptr<T> as() const {
        if (type_ != std::type_index(typeid(T))) {
            return nullptr;
        }
        return std::static_pointer_cast<T>(object_);
    }

    [[nodiscard]] std::type_index type() const noexcept { return type_; }
    [[nodiscard]] const void *get() const noexcept { return object_.get(); }

    friend bool operator==(const Handle &a, const Handle &b) {
        return a.object_ == b.object_ && a.type_ == b.type_;
    }

  private:
    std::shared_ptr<void> object_;
    std::type_index type_;
};

enum class HetKind {
    Integer,
    Real,
    Boolean,
    Text,
    RealList,
    IntegerList,
    TextList,
    PairList,
    Handle,
};

std::string_view toString(HetKind kind) noexcept;

/**
 * @brief Closed-set variant value stored in a HetMap.
 *
 * Integral arguments (other than bool) are stored as 64-bit integers and C strings as text.
 */
class HetValue {
  public:
    using Storage = std::variant<std::int64_t, double, bool, std::string, std::vector<double>,
                                 std::vector<std::int64_t>, std::vector<std::string>, PairList,
                                 Handle>;

    HetValue() = default;

    template <class T>
        requires(std::is_integral_v<T> && !std::is_same_v<T, bool>)
    HetValue(T value) : value_(static_cast<std::int64_t>(value)) {}

    HetValue(bool value) : value_(value) {}
    HetValue(double value) : value_(value) {}
    HetValue(float value) : value_(static_cast<double>(value)) {}
    HetValue(const char *value) : value_(std::string(value)) {}
    HetValue(std::string value) : value_(std::move(value)) {}
    HetValue(std::string_view value) : value_(std::string(value)) {}
    HetValue(std::vector<double> value) : value_(std::move(value)) {}
    HetValue(std::vector<std::int64_t> value) : value_(std::move(value)) {}
    HetValue(std::vector<std::string> value) : value_(std::move(value)) {}
    HetValue(PairList value) : value_(std::move(value)) {}
    HetValue(Handle value) : value_(std::move(value)) {}

    template <class T> HetValue(std::shared_ptr<T> object) : value_(Handle(std::move(object))) {}

    [[nodiscard]] HetKind kind() const noexcept { return static_cast<HetKind>(value_.index()); }
    [[nodiscard]] const Storage &storage() const noexcept { return value_; }

    template <class T> [[nodiscard]] bool holds() const noexcept {
        return std::holds_alternative<T>(value_);
    }

    /// Typed access; the only implicit conversion is integer to real.
    template <class T> [[nodiscard]] T as(std::string_view key = {}) const;

    friend bool operator==(const HetValue &a, const HetValue &b) { return a.value_ == b.value_; }

  private:
    Storage value_{std::int64_t{0}};
};

template <class T> constexpr HetKind hetKindOf() {
    if constexpr (std::is_same_v<T, bool>) {
        return HetKind::Boolean;
    } else if constexpr (std::is_integral_v<T>) {
        return HetKind::Integer;
    } else if constexpr (std::is_floating_point_v<T>) {
        return HetKind::Real;
    } else if constexpr (std::is_same_v<T, std::string>) {
        return HetKind::Text;
    } else if constexpr (std::is_same_v<T, std::vector<double>>) {
        return HetKind::RealList;
    } else if constexpr (std::is_same_v<T, std::vector<std::int64_t>>) {
        return HetKind::IntegerList;
    } else if constexpr (std::is_same_v<T, std::vector<std::string>>) {
        return HetKind::TextList;
    } else if constexpr (std::is_same_v<T, PairList>) {
        return HetKind::PairList;
    } else {
        static_assert(std::is_same_v<T, Handle>, "unsupported HetValue type");
        return HetKind::Handle;
    }
}

[[noreturn]] void throwVariantMismatch(std::string_view key, HetKind stored, HetKind requested);

template <class T> T HetValue::as(std::string_view key) const {
    constexpr HetKind wanted = hetKindOf<T>();
    if constexpr (wanted == HetKind::Integer) {
        if (const auto *v = std::get_if<std::int64_t>(&value_)) {
            return static_cast<T>(*v);
        }
    } else if constexpr (wanted == HetKind::Real) {
        if (const auto *v = std::get_if<double>(&value_)) {
            return static_cast<T>(*v);
        }
        if (const auto *v = std::get_if<std::int64_t>(&value_)) {
            return static_cast<T>(*v);
        }
    } else if constexpr (wanted == HetKind::RealList) {
        if (const auto *v = std::get_if<std::vector<double>>(&value_)) {
            return *v;
        }
        if (const auto *v = std::get_if<std::vector<std::int64_t>>(&value_)) {
            return T(v->begin(), v->end());
        }
    } else {
        if (const auto *v = std::get_if<T>(&value_)) {
            return *v;
        }
    }
    throwVariantMismatch(key, kind(), wanted);
}

/**
 * @brief String-keyed heterogeneous map used for configuration and metadata.
 *
 * @code
 * HetMap m{{"shots", 8192}, {"backend", "sim"}};
 * auto shots = m.get<int>("shots");
 * auto tol = m.get<double>("shots"); // integer widens to real
 * @endcode
 */
class HetMap {
  public:
    using Entries = std::map<std::string, HetValue, std::less<>>;

    HetMap() = default;
    HetMap(std::initializer_list<std::pair<const std::string, HetValue>> init) : entries_(init) {}

    /// Inserts or overwrites; returns the previous value when one existed.
    std::optional<HetValue> insert(std::string key, HetValue value);

    [[nodiscard]] bool contains(std::string_view key) const {
        return entries_.find(key) != entries_.end();
    }

    template <class T> [[nodiscard]] bool holds(std::string_view key) const {
        auto it = entries_.find(key);
        return it != entries_.end() && it->second.holds<T>();
    }

    /// Throws KeyMissing when absent.
    [[nodiscard]] const HetValue &at(std::string_view key) const;

    /// Throws KeyMissing or VariantMismatch.
    template <class T> [[nodiscard]] T get(std::string_view key) const {
        return at(key).as<T>(key);
    }

    template <class T> [[nodiscard]] T getOr(std::string_view key, T fallback) const {
        auto it = entries_.find(key);
        return it == entries_.end() ? fallback : it->second.as<T>(key);
    }

    /// Returns the object stored under key; VariantMismatch when the stored type differs.
    template <class T> [[nodiscard]] std::shared_ptr<T> getHandle(std::string_view key) const {
        auto handle = get<Handle>(key);
        auto object = handle.as<T>();
        if (!object) {
            fail(ErrorCode::VariantMismatch,
                 std::string(key) + " holds a handle of a different object type");
        }
        return object;
    }

    bool erase(std::string_view key);
    void merge(const HetMap &other);

    [[nodiscard]] std::size_t size() const noexcept { return entries_.size(); }
    [[nodiscard]] bool empty() const noexcept { return entries_.empty(); }
    [[nodiscard]] Entries::const_iterator begin() const { return entries_.begin(); }
    [[nodiscard]] Entries::const_iterator end() const { return entries_.end(); }

    friend bool operator==(const HetMap &a, const HetMap &b) { return a.entries_ == b.entries_; }

  private:
    Entries entries_;
};

} // namespace qf
