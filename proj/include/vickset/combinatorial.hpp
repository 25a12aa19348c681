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

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "vickset/enumeration.hpp"
#include "vickset/error.hpp"
#include "vickset/relation.hpp"
#include "vickset/value.hpp"

namespace vickset {

inline constexpr std::size_t kMaxGoods = 6;
inline constexpr std::size_t kMaxBidders = 6;

/// Goods, bidders and each bidder's reported value for bundles of goods.
/// Bundles not listed are worth 0.
struct CombinatorialInstance {
    Value goods;
    Value bidders;
    std::map<std::pair<Value, Value>, Rational> valuation;  // (bidder, bundle)

    [[nodiscard]] Rational value(const Value& bidder, const Value& bundle) const {
        auto it = valuation.find({bidder, bundle});
        return it == valuation.end() ? Rational(0) : it->second;
    }

    /// Throws ValidationError on a malformed instance and CapExceeded when
    /// the goods or bidder sets exceed the enumeration caps.
    void validate() const {
        if (!goods.is_set() || !bidders.is_set()) {
            throw ValidationError("goods and bidders must be sets");
        }
        if (goods.empty() || bidders.empty()) {
            throw ValidationError("goods and bidders must be nonempty");
        }
        for (const auto& [key, v] : valuation) {
            const auto& [bidder, bundle] = key;
            if (!bidders.contains(bidder)) {
                throw ValidationError("valuation for an unknown bidder");
            }
            if (!bundle.is_set() || !is_subset(bundle, goods)) {
                throw ValidationError("bundle is not a subset of the goods");
            }
            if (v < Rational(0)) {
                throw ValidationError("negative valuation");
            }
            if (bundle.empty() && v != Rational(0)) {
                throw ValidationError("the empty bundle must be worth 0");
            }
        }
        if (goods.size() > kMaxGoods) {
            throw CapExceeded("more than " + std::to_string(kMaxGoods) + " goods");
        }
        if (bidders.size() > kMaxBidders) {
            throw CapExceeded("more than " + std::to_string(kMaxBidders) +
                              " bidders");
        }
    }
};

/// Chosen allocation (bundle -> bidder), every bidder's payment, and the
/// total reported value of the allocation.
struct Outcome {
    Relation allocation;
    Relation payments;
    Rational welfare;
};

/// Every way to split G into blocks and hand the blocks to distinct bidders
/// of N: for each partition of G, each injection of its blocks into N.
inline std::vector<Relation> possible_allocations(const Value& goods,
                                                  const Value& bidders) {
    if (goods.empty() || bidders.empty()) {
        throw PreconditionError("possible_allocations: empty goods or bidders");
    }
    if (goods.size() > kMaxGoods || bidders.size() > kMaxBidders) {
        throw CapExceeded("possible_allocations: instance exceeds caps");
    }
    std::vector<Relation> out;
    for (const auto& partition : all_partitions_list(goods.elements())) {
        auto injections = injections_alg(partition, bidders);
        std::move(injections.begin(), injections.end(), std::back_inserter(out));
    }
    return out;
}

/// Sum of reported values over an allocation's (bundle, bidder) pairs.
inline Rational allocation_value(const CombinatorialInstance& inst,
                                 const Relation& allocation) {
    Rational total = 0;
    for (const auto& p : allocation.pairs()) {
        total += inst.value(p.second(), p.first());
    }
    return total;
}

/// Value of the allocation to everyone except `excluded`.
inline Rational others_value(const CombinatorialInstance& inst,
                             const Relation& allocation, const Value& excluded) {
    Rational total = 0;
    for (const auto& p : allocation.pairs()) {
        if (!(p.second() == excluded)) {
            total += inst.value(p.second(), p.first());
        }
    }
    return total;
}

namespace detail {

struct BestAllocation {
    Relation allocation;
    Rational value;
};

/// Highest-value allocation of the goods among `bidders`; ties go to the
/// canonically least allocation. Empty when there are no bidders.
inline std::optional<BestAllocation> best_allocation(
    const CombinatorialInstance& inst, const Value& bidders) {
    if (bidders.empty()) {
        return std::nullopt;
    }
    std::optional<BestAllocation> best;
    for (auto& candidate : possible_allocations(inst.goods, bidders)) {
        Rational v = allocation_value(inst, candidate);
        if (!best || v > best->value ||
            (v == best->value && candidate < best->allocation)) {
            best = BestAllocation{std::move(candidate), v};
        }
    }
    return best;
}

}  // namespace detail

/// Vickrey-Clarke-Groves clearing. The welfare-maximizing allocation is
/// chosen; bidder n pays the best welfare the others could reach without n
/// minus what the others receive under the chosen allocation. With nobody
/// left after removing n, the former term is 0.
inline Outcome clear_vickrey(const CombinatorialInstance& inst) {
    inst.validate();
    auto best = detail::best_allocation(inst, inst.bidders);
    std::vector<Value> payments;
    for (const auto& n : inst.bidders.elements()) {
        Value rest = set_difference(inst.bidders, Value::set({n}));
        auto without = detail::best_allocation(inst, rest);
        Rational alone = without ? without->value : Rational(0);
        Rational pay = alone - others_value(inst, best->allocation, n);
        payments.push_back(Value::pair(n, Value::number(pay)));
    }
    return {best->allocation,
            Relation::unchecked(Value::set_from_sorted(std::move(payments))),
            best->value};
}

/// Instance as a single Value: (goods, (bidders, {((bidder, bundle), v)})).
inline Value instance_to_value(const CombinatorialInstance& inst) {
    std::vector<Value> table;
    for (const auto& [key, v] : inst.valuation) {
        table.push_back(
            Value::pair(Value::pair(key.first, key.second), Value::number(v)));
    }
    return Value::pair(inst.goods,
                       Value::pair(inst.bidders, Value::set(std::move(table))));
}

inline CombinatorialInstance instance_from_value(const Value& v) {
    CombinatorialInstance inst;
    inst.goods = v.first();
    inst.bidders = v.second().first();
    for (const auto& entry : v.second().second().elements()) {
        inst.valuation[{entry.first().first(), entry.first().second()}] =
            entry.second().as_number();
    }
    return inst;
}

}  // namespace vickset
