// Copyright 2026 The vickset Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <memory>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "vickset/error.hpp"
#include "vickset/rational.hpp"

namespace vickset {

class Value;

namespace detail {
struct Node;
}

/// A hereditarily finite datum: a numeric atom, a symbol atom, an ordered
/// pair, or a finite set of Values.
///
/// Values are immutable and always canonical: sets are stored sorted under
/// the total order below with duplicates removed, and numbers are reduced
/// rationals (integers are rationals with denominator 1). Copying a Value is
/// a reference-count bump.
///
/// Total order: numbers < symbols < pairs < sets. Numbers compare by
/// numeric value, symbols by bytes, pairs and sets lexicographically.
class Value {
  public:
    enum class Kind : std::uint8_t { Number = 0, Symbol = 1, Pair = 2, Set = 3 };

    /// The empty set.
    Value();

    static Value number(const Rational& r);
    static Value integer(std::int64_t n) { return number(Rational(n)); }
    static Value rational(std::int64_t n, std::int64_t d) {
        return number(Rational(n, d));
    }
    static Value symbol(std::string s);
    static Value pair(Value first, Value second);
    /// Builds a set from arbitrary elements, sorting and deduplicating.
    static Value set(std::vector<Value> elems);
    static Value set(std::initializer_list<Value> elems) {
        return set(std::vector<Value>(elems));
    }
    /// Builds a set from elements already strictly increasing. Unchecked.
    static Value set_from_sorted(std::vector<Value> elems);
    static Value empty_set() { return Value(); }

    /// Reserved symbol returned by `the_elem` and evaluation off-domain.
    static Value undefined();

    [[nodiscard]] Kind kind() const noexcept;
    [[nodiscard]] bool is_number() const noexcept { return kind() == Kind::Number; }
    [[nodiscard]] bool is_symbol() const noexcept { return kind() == Kind::Symbol; }
    [[nodiscard]] bool is_pair() const noexcept { return kind() == Kind::Pair; }
    [[nodiscard]] bool is_set() const noexcept { return kind() == Kind::Set; }
    [[nodiscard]] bool is_undefined() const noexcept;

    [[nodiscard]] const Rational& as_number() const;
    [[nodiscard]] const std::string& as_symbol() const;
    [[nodiscard]] const Value& first() const;
    [[nodiscard]] const Value& second() const;
    // Views into the node; unavailable on temporaries, whose node may die
    // before the view is used.
    [[nodiscard]] std::span<const Value> elements() const&;
    std::span<const Value> elements() const&& = delete;

    [[nodiscard]] std::size_t size() const { return elements().size(); }
    [[nodiscard]] bool empty() const { return elements().empty(); }
    [[nodiscard]] bool contains(const Value& v) const;

    [[nodiscard]] std::size_t hash() const noexcept;

    friend std::strong_ordering operator<=>(const Value& a, const Value& b);
    friend bool operator==(const Value& a, const Value& b);

  private:
    explicit Value(std::shared_ptr<const detail::Node> node)
        : node_(std::move(node)) {}

    std::shared_ptr<const detail::Node> node_;
};

namespace detail {

struct PairData {
    Value first;
    Value second;
};

struct Node {
    Value::Kind kind;
    std::size_t hash;
    std::variant<Rational, std::string, PairData, std::vector<Value>> data;
};

inline std::size_t mix_hash(std::size_t seed, std::size_t h) noexcept {
    return seed ^ (h + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

inline const std::shared_ptr<const Node>& empty_set_node() {
    static const auto node = std::make_shared<const Node>(
        Node{Value::Kind::Set, 0x5e7ULL, std::vector<Value>{}});
    return node;
}

inline constexpr const char* kUndefinedSymbol = "#undefined";

}  // namespace detail

inline Value::Value() : node_(detail::empty_set_node()) {}

inline Value Value::number(const Rational& r) {
    std::size_t h = detail::mix_hash(std::hash<std::int64_t>{}(r.numerator()),
                                     std::hash<std::int64_t>{}(r.denominator()));
    return Value(std::make_shared<const detail::Node>(
        detail::Node{Kind::Number, h, r}));
}

inline Value Value::symbol(std::string s) {
    std::size_t h = detail::mix_hash(0x51ULL, std::hash<std::string>{}(s));
    return Value(std::make_shared<const detail::Node>(
        detail::Node{Kind::Symbol, h, std::move(s)}));
}

inline Value Value::pair(Value first, Value second) {
    std::size_t h =
        detail::mix_hash(detail::mix_hash(0x9a1ULL, first.hash()), second.hash());
    return Value(std::make_shared<const detail::Node>(detail::Node{
        Kind::Pair, h, detail::PairData{std::move(first), std::move(second)}}));
}

inline Value Value::set(std::vector<Value> elems) {
    std::sort(elems.begin(), elems.end());
    elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
    return set_from_sorted(std::move(elems));
}

inline Value Value::set_from_sorted(std::vector<Value> elems) {
    if (elems.empty()) {
        return Value();
    }
    std::size_t h = 0x5e7ULL;
    for (const auto& e : elems) {
        h = detail::mix_hash(h, e.hash());
    }
    return Value(std::make_shared<const detail::Node>(
        detail::Node{Kind::Set, h, std::move(elems)}));
}

inline Value Value::undefined() {
    static const Value u = symbol(detail::kUndefinedSymbol);
    return u;
}

inline Value::Kind Value::kind() const noexcept { return node_->kind; }

inline bool Value::is_undefined() const noexcept {
    return is_symbol() &&
           std::get<std::string>(node_->data) == detail::kUndefinedSymbol;
}

inline const Rational& Value::as_number() const {
    if (!is_number()) {
        throw TypeError("expected a number");
    }
    return std::get<Rational>(node_->data);
}

inline const std::string& Value::as_symbol() const {
    if (!is_symbol()) {
        throw TypeError("expected a symbol");
    }
    return std::get<std::string>(node_->data);
}

inline const Value& Value::first() const {
    if (!is_pair()) {
        throw TypeError("expected a pair");
    }
    return std::get<detail::PairData>(node_->data).first;
}

inline const Value& Value::second() const {
    if (!is_pair()) {
        throw TypeError("expected a pair");
    }
    return std::get<detail::PairData>(node_->data).second;
}

inline std::span<const Value> Value::elements() const& {
    if (!is_set()) {
        throw TypeError("expected a set");
    }
    return std::get<std::vector<Value>>(node_->data);
}

inline bool Value::contains(const Value& v) const {
    auto elems = elements();
    return std::binary_search(elems.begin(), elems.end(), v);
}

inline std::size_t Value::hash() const noexcept { return node_->hash; }

inline std::strong_ordering operator<=>(const Value& a, const Value& b) {
    if (a.node_ == b.node_) {
        return std::strong_ordering::equal;
    }
    if (a.kind() != b.kind()) {
        return a.kind() <=> b.kind();
    }
    switch (a.kind()) {
        case Value::Kind::Number:
            return a.as_number() <=> b.as_number();
        case Value::Kind::Symbol:
            return a.as_symbol().compare(b.as_symbol()) <=> 0;
        case Value::Kind::Pair: {
            if (auto c = a.first() <=> b.first(); c != 0) {
                return c;
            }
            return a.second() <=> b.second();
        }
        case Value::Kind::Set: {
            auto x = a.elements();
            auto y = b.elements();
            return std::lexicographical_compare_three_way(x.begin(), x.end(),
                                                          y.begin(), y.end());
        }
    }
    return std::strong_ordering::equal;
}

inline bool operator==(const Value& a, const Value& b) {
    if (a.node_ == b.node_) {
        return true;
    }
    if (a.hash() != b.hash()) {
        return false;
    }
    return (a <=> b) == 0;
}

struct ValueHash {
    std::size_t operator()(const Value& v) const noexcept { return v.hash(); }
};

// ---------------------------------------------------------------------------
// Raw (non-canonical) trees and canonicalization.

/// An input tree as written: set children in any order, possibly repeated,
/// rationals possibly unreduced. Produced by the text parser.
struct RawValue {
    struct Num {
        std::int64_t num;
        std::int64_t den;
    };
    struct Sym {
        std::string text;
    };
    struct PairNode {
        std::vector<RawValue> parts;  // exactly two
    };
    struct SetNode {
        std::vector<RawValue> elems;
    };
    std::variant<Num, Sym, PairNode, SetNode> node;
};

/// Returns the unique canonical Value for a raw tree.
/// Throws ValidationError on a zero denominator.
inline Value canonicalize(const RawValue& raw) {
    return std::visit(
        [](const auto& n) -> Value {
            using T = std::decay_t<decltype(n)>;
            if constexpr (std::is_same_v<T, RawValue::Num>) {
                return Value::rational(n.num, n.den);
            } else if constexpr (std::is_same_v<T, RawValue::Sym>) {
                return Value::symbol(n.text);
            } else if constexpr (std::is_same_v<T, RawValue::PairNode>) {
                if (n.parts.size() != 2) {
                    throw ValidationError("pair needs exactly two components");
                }
                return Value::pair(canonicalize(n.parts[0]),
                                   canonicalize(n.parts[1]));
            } else {
                std::vector<Value> elems;
                elems.reserve(n.elems.size());
                for (const auto& e : n.elems) {
                    elems.push_back(canonicalize(e));
                }
                return Value::set(std::move(elems));
            }
        },
        raw.node);
}

/// Canonical Values are fixed points; provided so callers can state the law.
inline Value canonicalize(const Value& v) { return v; }

// ---------------------------------------------------------------------------
// Elementary set operations. All arguments must be sets (TypeError otherwise).

inline Value set_union(const Value& a, const Value& b) {
    auto x = a.elements();
    auto y = b.elements();
    std::vector<Value> out;
    out.reserve(x.size() + y.size());
    std::set_union(x.begin(), x.end(), y.begin(), y.end(),
                   std::back_inserter(out));
    return Value::set_from_sorted(std::move(out));
}

inline Value set_intersection(const Value& a, const Value& b) {
    auto x = a.elements();
    auto y = b.elements();
    std::vector<Value> out;
    std::set_intersection(x.begin(), x.end(), y.begin(), y.end(),
                          std::back_inserter(out));
    return Value::set_from_sorted(std::move(out));
}

inline Value set_difference(const Value& a, const Value& b) {
    auto x = a.elements();
    auto y = b.elements();
    std::vector<Value> out;
    std::set_difference(x.begin(), x.end(), y.begin(), y.end(),
                        std::back_inserter(out));
    return Value::set_from_sorted(std::move(out));
}

/// { (x, y) | x in a, y in b }. Already sorted by construction.
inline Value cartesian_product(const Value& a, const Value& b) {
    auto x = a.elements();
    auto y = b.elements();
    std::vector<Value> out;
    out.reserve(x.size() * y.size());
    for (const auto& u : x) {
        for (const auto& v : y) {
            out.push_back(Value::pair(u, v));
        }
    }
    return Value::set_from_sorted(std::move(out));
}

inline bool is_subset(const Value& a, const Value& b) {
    auto x = a.elements();
    auto y = b.elements();
    return std::includes(y.begin(), y.end(), x.begin(), x.end());
}

inline Value set_insert(const Value& s, const Value& v) {
    return set_union(s, Value::set({v}));
}

/// Union of a set of sets.
inline Value big_union(const Value& family) {
    std::vector<Value> out;
    for (const auto& member : family.elements()) {
        for (const auto& e : member.elements()) {
            out.push_back(e);
        }
    }
    return Value::set(std::move(out));
}

/// The single element of a singleton; Undefined for any other set.
inline Value the_elem(const Value& x) {
    auto elems = x.elements();
    if (elems.size() == 1) {
        return elems.front();
    }
    return Value::undefined();
}

namespace detail {
inline const Rational& require_number(const Value& v, const char* op) {
    if (!v.is_number()) {
        throw DomainError(std::string(op) + ": non-numeric element");
    }
    return v.as_number();
}
}  // namespace detail

/// Numeric minimum of a nonempty set of numbers. Numbers sort first and by
/// value, so for a purely numeric set this is the first element.
inline Value min_of(const Value& x) {
    auto elems = x.elements();
    if (elems.empty()) {
        throw DomainError("min_of: empty set");
    }
    for (const auto& e : elems) {
        detail::require_number(e, "min_of");
    }
    return elems.front();
}

inline Value max_of(const Value& x) {
    auto elems = x.elements();
    if (elems.empty()) {
        throw DomainError("max_of: empty set");
    }
    for (const auto& e : elems) {
        detail::require_number(e, "max_of");
    }
    return elems.back();
}

}  // namespace vickset

template <>
struct std::hash<vickset::Value> {
    std::size_t operator()(const vickset::Value& v) const noexcept {
        return v.hash();
    }
};
