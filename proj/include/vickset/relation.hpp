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
#include <functional>
#include <map>
#include <span>
#include <utility>
#include <vector>

#include "vickset/error.hpp"
#include "vickset/value.hpp"

namespace vickset {

/// A finite relation: a canonical set Value whose members are all pairs.
/// Pairs are ordered by first component, then second, so the pairs sharing a
/// first component form a contiguous run.
class Relation {
  public:
    Relation() = default;

    /// Throws TypeError unless `v` is a set of pairs.
    explicit Relation(Value v) : set_(std::move(v)) {
        for (const auto& e : set_.elements()) {
            if (!e.is_pair()) {
                throw TypeError("relation member is not a pair");
            }
        }
    }

    static Relation from_pairs(const std::vector<std::pair<Value, Value>>& ps) {
        std::vector<Value> elems;
        elems.reserve(ps.size());
        for (const auto& [x, y] : ps) {
            elems.push_back(Value::pair(x, y));
        }
        return unchecked(Value::set(std::move(elems)));
    }

    /// Wraps a Value already known to be a set of pairs.
    static Relation unchecked(Value v) {
        Relation r;
        r.set_ = std::move(v);
        return r;
    }

    [[nodiscard]] const Value& value() const noexcept { return set_; }
    [[nodiscard]] std::span<const Value> pairs() const& { return set_.elements(); }
    std::span<const Value> pairs() const&& = delete;
    [[nodiscard]] std::size_t size() const { return set_.size(); }
    [[nodiscard]] bool empty() const { return set_.empty(); }
    [[nodiscard]] bool contains(const Value& x, const Value& y) const {
        return set_.contains(Value::pair(x, y));
    }

    friend bool operator==(const Relation&, const Relation&) = default;
    friend auto operator<=>(const Relation& a, const Relation& b) {
        return a.set_ <=> b.set_;
    }

  private:
    Value set_;
};

/// Pairs of R whose first component equals x (a contiguous subrange).
inline std::span<const Value> pairs_at(const Relation& r, const Value& x) {
    auto ps = r.pairs();
    auto lo = std::lower_bound(
        ps.begin(), ps.end(), x,
        [](const Value& p, const Value& key) { return p.first() < key; });
    auto hi = std::upper_bound(
        lo, ps.end(), x,
        [](const Value& key, const Value& p) { return key < p.first(); });
    return {lo, hi};
}

inline Value domain(const Relation& r) {
    std::vector<Value> out;
    for (const auto& p : r.pairs()) {
        if (out.empty() || !(out.back() == p.first())) {
            out.push_back(p.first());
        }
    }
    return Value::set_from_sorted(std::move(out));
}

inline Value range(const Relation& r) {
    std::vector<Value> out;
    out.reserve(r.size());
    for (const auto& p : r.pairs()) {
        out.push_back(p.second());
    }
    return Value::set(std::move(out));
}

struct Endpoints {
    Value domain;
    Value range;
};

inline Endpoints endpoints(const Relation& r) { return {domain(r), range(r)}; }

/// R``{x}
inline Value image_of(const Relation& r, const Value& x) {
    std::vector<Value> out;
    for (const auto& p : pairs_at(r, x)) {
        out.push_back(p.second());
    }
    return Value::set_from_sorted(std::move(out));
}

/// R``X = { y | exists x in X. (x, y) in R }
inline Value image(const Relation& r, const Value& x) {
    std::vector<Value> out;
    for (const auto& p : r.pairs()) {
        if (x.contains(p.first())) {
            out.push_back(p.second());
        }
    }
    return Value::set(std::move(out));
}

inline Relation converse(const Relation& r) {
    std::vector<Value> out;
    out.reserve(r.size());
    for (const auto& p : r.pairs()) {
        out.push_back(Value::pair(p.second(), p.first()));
    }
    return Relation::unchecked(Value::set(std::move(out)));
}

/// Left-to-right composition: { (x, z) | (x, y) in R, (y, z) in S }.
inline Relation compose(const Relation& r, const Relation& s) {
    std::vector<Value> out;
    for (const auto& p : r.pairs()) {
        for (const auto& q : pairs_at(s, p.second())) {
            out.push_back(Value::pair(p.first(), q.second()));
        }
    }
    return Relation::unchecked(Value::set(std::move(out)));
}

/// Identity relation on an explicit finite carrier.
inline Relation identity(const Value& carrier) {
    std::vector<Value> out;
    for (const auto& x : carrier.elements()) {
        out.push_back(Value::pair(x, x));
    }
    return Relation::unchecked(Value::set_from_sorted(std::move(out)));
}

/// R outside X = R - (X x Range R): drops every pair whose first
/// component lies in X.
inline Relation outside(const Relation& r, const Value& x) {
    return Relation::unchecked(
        set_difference(r.value(), cartesian_product(x, range(r))));
}

/// b -- i
inline Relation single_outside(const Relation& r, const Value& i) {
    return outside(r, Value::set({i}));
}

/// P +* Q = (P outside Domain Q) U Q
inline Relation paste(const Relation& p, const Relation& q) {
    return Relation::unchecked(
        set_union(outside(p, domain(q)).value(), q.value()));
}

/// F +< (x, y)
inline Relation single_paste(const Relation& f, const Value& x, const Value& y) {
    return paste(f, Relation::unchecked(Value::set({Value::pair(x, y)})));
}

inline Relation single_paste(const Relation& f, const Value& xy) {
    return single_paste(f, xy.first(), xy.second());
}

/// A set with at most one element.
inline bool trivial(const Value& x) {
    return is_subset(x, Value::set({the_elem(x)}));
}

/// R ,, a = the_elem (R``{a}); Undefined unless the image is a singleton.
inline Value eval_rel(const Relation& r, const Value& a) {
    return the_elem(image_of(r, a));
}

/// R ,,, x = union of R``{x}. Every image member must be a set.
inline Value eval_rel2(const Relation& r, const Value& x) {
    Value img = image_of(r, x);
    for (const auto& y : img.elements()) {
        if (!y.is_set()) {
            throw DomainError("eval_rel2: image member is not a set");
        }
    }
    return big_union(img);
}

/// Right-uniqueness, by the pair scan: no x maps to two distinct y.
/// Equal first components are adjacent in canonical order.
inline bool runiq(const Relation& r) {
    auto ps = r.pairs();
    for (std::size_t k = 1; k < ps.size(); ++k) {
        if (ps[k - 1].first() == ps[k].first()) {
            return false;
        }
    }
    return true;
}

/// Alternative characterizations of right-uniqueness. Each follows its
/// formulation literally over the finite data at hand; they exist so the law
/// suite can check that they agree.
namespace runiq_forms {

/// forall X. trivial X --> trivial (R``X), with X ranging over the subsets of
/// `universe` (a superset of Domain R; sets missing the domain have empty
/// image, so nothing is lost by the restriction).
inline bool by_definition(const Relation& r, const Value& universe) {
    auto u = universe.elements();
    if (u.size() > 20) {
        throw CapExceeded("runiq definition: universe too large");
    }
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << u.size()); ++mask) {
        std::vector<Value> xs;
        for (std::size_t k = 0; k < u.size(); ++k) {
            if (mask & (std::uint64_t{1} << k)) {
                xs.push_back(u[k]);
            }
        }
        Value x = Value::set_from_sorted(std::move(xs));
        if (trivial(x) && !trivial(image(r, x))) {
            return false;
        }
    }
    return true;
}

inline bool by_definition(const Relation& r) {
    return by_definition(r, domain(r));
}

/// forall x. trivial (R``{x})
inline bool alt(const Relation& r) {
    const Value dom = domain(r);
    for (const auto& x : dom.elements()) {
        if (!trivial(image(r, Value::set({x})))) {
            return false;
        }
    }
    return true;
}

/// forall x y y'. (x, y) in R and (x, y') in R --> y = y'
inline bool basic(const Relation& r) {
    for (const auto& p : r.pairs()) {
        for (const auto& q : r.pairs()) {
            if (p.first() == q.first() && !(p.second() == q.second())) {
                return false;
            }
        }
    }
    return true;
}

/// forall x. R``{x} subset {R ,, x}
inline bool wrt_eval_rel(const Relation& r) {
    const Value dom = domain(r);
    for (const auto& x : dom.elements()) {
        if (!is_subset(image(r, Value::set({x})), Value::set({eval_rel(r, x)}))) {
            return false;
        }
    }
    return true;
}

/// forall x in Domain R. R``{x} = {R ,, x}
inline bool wrt_eval_rel_prime(const Relation& r) {
    const Value dom = domain(r);
    for (const auto& x : dom.elements()) {
        if (!(image(r, Value::set({x})) == Value::set({eval_rel(r, x)}))) {
            return false;
        }
    }
    return true;
}

/// forall a in Domain R. exists! b. (a, b) in R
inline bool wrt_ex1(const Relation& r) {
    const Value dom = domain(r);
    for (const auto& a : dom.elements()) {
        std::size_t witnesses = 0;
        for (const auto& p : r.pairs()) {
            if (p.first() == a) {
                ++witnesses;
            }
        }
        if (witnesses != 1) {
            return false;
        }
    }
    return true;
}

/// THE b. (a, b) in R: the unique witness, else Undefined.
inline Value the_witness(const Relation& r, const Value& a) {
    const Value* found = nullptr;
    for (const auto& p : r.pairs()) {
        if (p.first() == a) {
            if (found != nullptr) {
                return Value::undefined();
            }
            found = &p.second();
        }
    }
    return found != nullptr ? *found : Value::undefined();
}

/// forall a b. (a, b) in R --> b = (THE b. (a, b) in R)
inline bool wrt_the(const Relation& r) {
    for (const auto& p : r.pairs()) {
        if (!(p.second() == the_witness(r, p.first()))) {
            return false;
        }
    }
    return true;
}

/// inj_on fst R: distinct pairs of R have distinct first components.
inline bool inj_on_fst(const Relation& r) {
    auto ps = r.pairs();
    for (std::size_t a = 0; a < ps.size(); ++a) {
        for (std::size_t b = 0; b < ps.size(); ++b) {
            if (ps[a].first() == ps[b].first() && !(ps[a] == ps[b])) {
                return false;
            }
        }
    }
    return true;
}

}  // namespace runiq_forms

/// graph X f = {(x, f x) | x in X}. `f` returns Undefined (or throws) where
/// it is not defined; an Undefined result is a DomainError.
template <typename F>
    requires std::is_invocable_r_v<Value, F, const Value&>
Relation graph(const Value& x, F&& f) {
    std::vector<Value> out;
    for (const auto& e : x.elements()) {
        Value y = std::invoke(f, e);
        if (y.is_undefined()) {
            throw DomainError("graph: function undefined on a domain point");
        }
        out.push_back(Value::pair(e, std::move(y)));
    }
    return Relation::unchecked(Value::set_from_sorted(std::move(out)));
}

/// graph over a finite lookup table.
inline Relation graph(const Value& x, const std::map<Value, Value>& table) {
    return graph(x, [&](const Value& e) {
        auto it = table.find(e);
        return it == table.end() ? Value::undefined() : it->second;
    });
}

/// toFunction R = (lambda x. R ,, x)
inline std::function<Value(const Value&)> to_function(Relation r) {
    return [r = std::move(r)](const Value& x) { return eval_rel(r, x); };
}

namespace detail {
inline Rational numeric_value_at(const Relation& f, const Value& x) {
    Value y = eval_rel(f, x);
    if (y.is_undefined()) {
        throw DomainError("arg_max: function undefined at a candidate");
    }
    return require_number(y, "arg_max");
}
}  // namespace detail

/// arg_max f A = {x in A. f x = Max (f`A)}
inline Value arg_max_set(const Relation& f, const Value& a) {
    if (a.empty()) {
        throw DomainError("arg_max: empty candidate set");
    }
    std::vector<Rational> values;
    for (const auto& x : a.elements()) {
        values.push_back(detail::numeric_value_at(f, x));
    }
    Rational best = *std::max_element(values.begin(), values.end());
    std::vector<Value> out;
    for (std::size_t k = 0; k < values.size(); ++k) {
        if (values[k] == best) {
            out.push_back(a.elements()[k]);
        }
    }
    return Value::set_from_sorted(std::move(out));
}

/// The same set computed by recursion on a list of candidates: keep the
/// maximizers of the tail and compare the head against them.
inline Value arg_max_recursive(const Relation& f, std::span<const Value> xs) {
    if (xs.empty()) {
        throw DomainError("arg_max: empty candidate list");
    }
    const Value& head = xs.front();
    if (xs.size() == 1) {
        detail::numeric_value_at(f, head);
        return Value::set({head});
    }
    Value rest = arg_max_recursive(f, xs.subspan(1));
    Rational head_value = detail::numeric_value_at(f, head);
    Rational rest_value = detail::numeric_value_at(f, rest.elements().front());
    if (head_value > rest_value) {
        return Value::set({head});
    }
    if (head_value == rest_value) {
        return set_insert(rest, head);
    }
    return rest;
}

}  // namespace vickset
