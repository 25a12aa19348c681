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
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "vickset/error.hpp"
#include "vickset/relation.hpp"
#include "vickset/value.hpp"

namespace vickset {

/// A partition written as an ordered list of blocks.
using PartitionList = std::vector<Value>;

inline constexpr std::size_t kMaxSubsetElements = 24;
inline constexpr std::size_t kMaxPartitionOracleElements = 6;

namespace detail {

inline void require_distinct(std::span<const Value> xs, const char* op) {
    std::vector<Value> sorted(xs.begin(), xs.end());
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
        throw PreconditionError(std::string(op) + ": list has duplicates");
    }
}

}  // namespace detail

/// Calls `visit(subset)` for each subset of `x`, in binary-counter order over
/// the canonical element order. Stops early when `visit` returns false.
template <typename F>
    requires std::is_invocable_r_v<bool, F, const Value&>
void for_each_subset(const Value& x, F&& visit) {
    auto elems = x.elements();
    if (elems.size() > kMaxSubsetElements) {
        throw CapExceeded("subset enumeration over more than " +
                          std::to_string(kMaxSubsetElements) + " elements");
    }
    const std::uint64_t count = std::uint64_t{1} << elems.size();
    std::vector<Value> members;
    for (std::uint64_t mask = 0; mask < count; ++mask) {
        members.clear();
        for (std::size_t k = 0; k < elems.size(); ++k) {
            if (mask & (std::uint64_t{1} << k)) {
                members.push_back(elems[k]);
            }
        }
        if (!std::invoke(visit, Value::set_from_sorted(members))) {
            return;
        }
    }
}

/// The powerset of `x`.
inline Value all_subsets(const Value& x) {
    std::vector<Value> out;
    for_each_subset(x, [&](const Value& s) {
        out.push_back(s);
        return true;
    });
    return Value::set(std::move(out));
}

/// Domain R = X, Range R within Y, R and its converse right-unique.
inline bool is_injection(const Relation& r, const Value& x, const Value& y) {
    return domain(r) == x && is_subset(range(r), y) && runiq(r) &&
           runiq(converse(r));
}

/// All injections from X into Y, by filtering every subset of X x Y.
inline Value injections_oracle(const Value& x, const Value& y) {
    std::vector<Value> out;
    for_each_subset(cartesian_product(x, y), [&](const Value& candidate) {
        if (is_injection(Relation::unchecked(candidate), x, y)) {
            out.push_back(candidate);
        }
        return true;
    });
    return Value::set(std::move(out));
}

namespace detail {

inline std::vector<Relation> injections_rec(std::span<const Value> xs,
                                            const Value& y) {
    if (xs.empty()) {
        return {Relation()};
    }
    std::vector<Relation> out;
    for (const auto& r : injections_rec(xs.subspan(1), y)) {
        const Value unused = set_difference(y, range(r));
        for (const auto& target : unused.elements()) {
            out.push_back(single_paste(r, xs.front(), target));
        }
    }
    return out;
}

}  // namespace detail

/// Constructive enumeration of the injections from the elements of `xs`
/// into `y`: each injection of the tail is extended at the head by every
/// unused target, targets taken in canonical order.
inline std::vector<Relation> injections_alg(std::span<const Value> xs,
                                            const Value& y) {
    detail::require_distinct(xs, "injections_alg");
    if (!y.is_set()) {
        throw TypeError("injections_alg: target is not a set");
    }
    return detail::injections_rec(xs, y);
}

/// (S U {new_el}) # remove1 S Sets
inline PartitionList insert_into_member_list(const Value& new_el,
                                             const PartitionList& sets,
                                             const Value& s) {
    auto it = std::find(sets.begin(), sets.end(), s);
    if (it == sets.end()) {
        throw PreconditionError("insert_into_member_list: block not present");
    }
    PartitionList out;
    out.reserve(sets.size());
    out.push_back(set_insert(s, new_el));
    out.insert(out.end(), sets.begin(), it);
    out.insert(out.end(), std::next(it), sets.end());
    return out;
}

/// The |P| + 1 ways to add `new_el` to partition P: as a fresh singleton
/// block (first), then merged into each existing block in turn.
inline std::vector<PartitionList> coarser_partitions_with_list(
    const Value& new_el, const PartitionList& p) {
    for (const auto& block : p) {
        if (block.contains(new_el)) {
            throw PreconditionError(
                "coarser_partitions_with_list: element already placed");
        }
    }
    std::vector<PartitionList> out;
    out.reserve(p.size() + 1);
    PartitionList fresh;
    fresh.reserve(p.size() + 1);
    fresh.push_back(Value::set({new_el}));
    fresh.insert(fresh.end(), p.begin(), p.end());
    out.push_back(std::move(fresh));
    for (const auto& block : p) {
        out.push_back(insert_into_member_list(new_el, p, block));
    }
    return out;
}

inline std::vector<PartitionList> all_coarser_partitions_with_list(
    const Value& elem, const std::vector<PartitionList>& ps) {
    std::vector<PartitionList> out;
    for (const auto& p : ps) {
        auto coarser = coarser_partitions_with_list(elem, p);
        std::move(coarser.begin(), coarser.end(), std::back_inserter(out));
    }
    return out;
}

namespace detail {

inline std::vector<PartitionList> partitions_rec(std::span<const Value> xs) {
    if (xs.empty()) {
        return {PartitionList{}};
    }
    return all_coarser_partitions_with_list(xs.front(),
                                            partitions_rec(xs.subspan(1)));
}

}  // namespace detail

/// Every partition of the elements of `xs`, each exactly once, as lists of
/// blocks. Recursion peels the head and refines over the tail's partitions.
inline std::vector<PartitionList> all_partitions_list(std::span<const Value> xs) {
    detail::require_distinct(xs, "all_partitions_list");
    return detail::partitions_rec(xs);
}

/// set-of-blocks view of a block list.
inline Value blocks_as_set(const PartitionList& p) {
    return Value::set(std::vector<Value>(p.begin(), p.end()));
}

/// forall X in P. forall Y in P. (X meets Y <-> X = Y)
inline bool is_partition(const Value& p) {
    for (const auto& x : p.elements()) {
        for (const auto& y : p.elements()) {
            bool meets = !set_intersection(x, y).empty();
            if (meets != (x == y)) {
                return false;
            }
        }
    }
    return true;
}

/// Union P = A and is_partition P
inline bool is_partition_of(const Value& p, const Value& a) {
    return big_union(p) == a && is_partition(p);
}

/// All partitions of A: the members of the powerset of the powerset of A
/// that satisfy is_partition_of. Families are explored one subset of A at
/// a time and a branch is abandoned as soon as two chosen members break the
/// pairwise condition, which no extension can repair. Capped at
/// kMaxPartitionOracleElements elements.
inline Value all_partitions_oracle(const Value& a) {
    if (a.size() > kMaxPartitionOracleElements) {
        throw CapExceeded("all_partitions_oracle: more than " +
                          std::to_string(kMaxPartitionOracleElements) +
                          " elements");
    }
    std::vector<Value> subsets;
    for_each_subset(a, [&](const Value& s) {
        subsets.push_back(s);
        return true;
    });

    std::vector<Value> out;
    std::vector<Value> chosen;
    std::function<void(std::size_t)> explore = [&](std::size_t k) {
        if (k == subsets.size()) {
            Value family = Value::set(chosen);
            if (is_partition_of(family, a)) {
                out.push_back(std::move(family));
            }
            return;
        }
        explore(k + 1);
        const Value& s = subsets[k];
        bool ok = !s.empty();  // s meets s iff s = s
        for (const auto& c : chosen) {
            if (!set_intersection(s, c).empty()) {
                ok = false;
                break;
            }
        }
        if (ok) {
            chosen.push_back(s);
            explore(k + 1);
            chosen.pop_back();
        }
    };
    explore(0);
    return Value::set(std::move(out));
}

}  // namespace vickset
