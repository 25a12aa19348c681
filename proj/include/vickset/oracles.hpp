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
#include <vector>

#include "vickset/combinatorial.hpp"
#include "vickset/relation.hpp"
#include "vickset/universe.hpp"
#include "vickset/value.hpp"

// Reference computations that share no enumeration code with the clearing
// engine: allocations are produced by assigning every good to a bidder
// directly, instead of via partitions and injections.

namespace vickset::oracle {

struct AssignmentResult {
    Relation allocation;
    Rational welfare;
};

/// Best allocation over all |N|^|G| assignments good -> bidder; a bidder's
/// bundle is the set of goods assigned to it. Ties go to the least
/// allocation Value. nullopt when N is empty.
inline std::optional<AssignmentResult> best_assignment(
    const CombinatorialInstance& inst, const Value& bidders) {
    auto goods = inst.goods.elements();
    auto who = bidders.elements();
    if (who.empty()) {
        return std::nullopt;
    }
    std::optional<AssignmentResult> best;
    std::vector<std::size_t> owner(goods.size(), 0);
    while (true) {
        std::map<Value, std::vector<Value>> bundles;  // bidder -> goods
        for (std::size_t g = 0; g < goods.size(); ++g) {
            bundles[who[owner[g]]].push_back(goods[g]);
        }
        std::vector<std::pair<Value, Value>> pairs;
        Rational welfare = 0;
        for (auto& [bidder, items] : bundles) {
            Value bundle = Value::set(items);
            welfare += inst.value(bidder, bundle);
            pairs.emplace_back(bundle, bidder);
        }
        Relation allocation = Relation::from_pairs(pairs);
        if (!best || welfare > best->welfare ||
            (welfare == best->welfare && allocation < best->allocation)) {
            best = AssignmentResult{allocation, welfare};
        }
        std::size_t g = 0;
        while (g < goods.size() && ++owner[g] == who.size()) {
            owner[g] = 0;
            ++g;
        }
        if (g == goods.size()) {
            break;
        }
    }
    return best;
}

/// VCG outcome computed from the assignment oracle.
inline Outcome vickrey(const CombinatorialInstance& inst) {
    auto best = best_assignment(inst, inst.bidders);
    std::vector<std::pair<Value, Value>> payments;
    for (const auto& n : inst.bidders.elements()) {
        auto without =
            best_assignment(inst, set_difference(inst.bidders, Value::set({n})));
        Rational others = 0;
        for (const auto& p : best->allocation.pairs()) {
            if (!(p.second() == n)) {
                others += inst.value(p.second(), p.first());
            }
        }
        Rational pay = (without ? without->welfare : Rational(0)) - others;
        payments.emplace_back(n, Value::number(pay));
    }
    return {best->allocation, Relation::from_pairs(payments), best->welfare};
}

/// Random instance with monotone (free-disposal) valuations: each bundle is
/// worth at least every sub-bundle, plus a random increment in 0..max_step.
inline CombinatorialInstance random_monotone_instance(universe::Rng& rng,
                                                      std::size_t goods,
                                                      std::size_t bidders,
                                                      std::int64_t max_step) {
    CombinatorialInstance inst;
    inst.goods = universe::atoms(goods);
    std::vector<Value> names;
    for (std::size_t k = 0; k < bidders; ++k) {
        names.push_back(Value::integer(static_cast<std::int64_t>(k + 1)));
    }
    inst.bidders = Value::set(names);
    std::vector<Value> bundles;
    for_each_subset(inst.goods, [&](const Value& s) {
        bundles.push_back(s);
        return true;
    });
    // Binary-counter order lists every proper subset before its supersets.
    for (const auto& n : names) {
        for (const auto& bundle : bundles) {
            if (bundle.empty()) {
                continue;
            }
            Rational floor = 0;
            for (const auto& g : bundle.elements()) {
                Rational sub = inst.value(n, set_difference(bundle, Value::set({g})));
                if (sub > floor) {
                    floor = sub;
                }
            }
            Rational step(static_cast<std::int64_t>(
                              rng.below(static_cast<std::uint64_t>(max_step) + 1)),
                          rng.coin() ? 1 : 2);
            Rational v = floor + step;
            if (v != Rational(0)) {
                inst.valuation[{n, bundle}] = v;
            }
        }
    }
    return inst;
}

}  // namespace vickset::oracle
