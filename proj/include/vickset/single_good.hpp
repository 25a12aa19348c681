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
#include <vector>

#include "vickset/error.hpp"
#include "vickset/quotient.hpp"
#include "vickset/relation.hpp"
#include "vickset/value.hpp"

namespace vickset {

inline constexpr std::size_t kMaxGridSize = 5;
inline constexpr std::size_t kMaxSingleGoodBidders = 3;

/// Outcome functions of a single-good auction from one bidder's point of
/// view. Both relations are keyed by bid vectors (relations bidder -> bid):
/// `allocation` yields 1 if `bidder` gets the good and 0 otherwise, `price`
/// yields what `bidder` pays.
struct SingleGoodMechanism {
    Value bidder;
    Relation allocation;
    Relation price;
};

namespace detail {

inline void check_single_good_args(const Value& bidders, const Value& grid,
                                   const Value& i) {
    if (bidders.size() < 2) {
        throw PreconditionError("single-good auction needs at least 2 bidders");
    }
    if (grid.empty()) {
        throw PreconditionError("bid grid is empty");
    }
    if (!bidders.contains(i)) {
        throw PreconditionError("bidder of interest is not among the bidders");
    }
    for (const auto& g : grid.elements()) {
        if (!g.is_number()) {
            throw ValidationError("bid grid entries must be numbers");
        }
    }
    if (bidders.size() > kMaxSingleGoodBidders) {
        throw CapExceeded("more than " + std::to_string(kMaxSingleGoodBidders) +
                          " bidders in a single-good grid");
    }
    if (grid.size() > kMaxGridSize) {
        throw CapExceeded("bid grid larger than " + std::to_string(kMaxGridSize));
    }
}

inline Rational number_at(const Relation& r, const Value& x, const char* what) {
    Value y = eval_rel(r, x);
    if (!y.is_number()) {
        throw DomainError(std::string(what) + " is undefined or non-numeric");
    }
    return y.as_number();
}

}  // namespace detail

/// Every bid vector bidders -> grid; the last bidder's bid varies fastest.
inline std::vector<Relation> bid_vectors(const Value& bidders, const Value& grid) {
    auto who = bidders.elements();
    auto bids = grid.elements();
    std::size_t total = 1;
    for (std::size_t k = 0; k < who.size(); ++k) {
        total *= bids.size();
    }
    std::vector<Relation> out;
    out.reserve(total);
    for (std::size_t index = 0; index < total; ++index) {
        std::vector<Value> pairs(who.size());
        std::size_t rest = index;
        for (std::size_t k = who.size(); k-- > 0;) {
            pairs[k] = Value::pair(who[k], bids[rest % bids.size()]);
            rest /= bids.size();
        }
        out.push_back(Relation::unchecked(Value::set_from_sorted(std::move(pairs))));
    }
    return out;
}

/// Winner under bid vector b: the least bidder (canonical order) among the
/// highest bids.
inline Value winner(const Relation& b) {
    const Value best = arg_max_set(b, domain(b));
    return best.elements().front();
}

namespace detail {

template <typename PriceRule>
SingleGoodMechanism build_single_good(const Value& bidders, const Value& grid,
                                      const Value& i, PriceRule rule) {
    check_single_good_args(bidders, grid, i);
    std::vector<Value> alloc;
    std::vector<Value> price;
    for (const auto& b : bid_vectors(bidders, grid)) {
        bool won = winner(b) == i;
        alloc.push_back(Value::pair(b.value(), Value::integer(won ? 1 : 0)));
        price.push_back(
            Value::pair(b.value(), won ? rule(b) : Value::integer(0)));
    }
    return {i, Relation::unchecked(Value::set(std::move(alloc))),
            Relation::unchecked(Value::set(std::move(price)))};
}

}  // namespace detail

/// Second-price (Vickrey) auction over the full grid of bid vectors: the
/// winner pays the highest competing bid.
inline SingleGoodMechanism second_price_single_good(const Value& bidders,
                                                    const Value& grid,
                                                    const Value& i) {
    return detail::build_single_good(bidders, grid, i, [&](const Relation& b) {
        return max_of(range(single_outside(b, i)));
    });
}

/// First-price variant: the winner pays their own bid. Not truthful.
inline SingleGoodMechanism first_price_single_good(const Value& bidders,
                                                   const Value& grid,
                                                   const Value& i) {
    return detail::build_single_good(bidders, grid, i, [&](const Relation& b) {
        return eval_rel(b, i);
    });
}

/// A bid vector b and a valuation v for which reporting v instead of b's
/// bid at i would have been strictly better.
struct Dom4Violation {
    Relation bid;
    Value valuation;
};

/// Searches for (b, v) with {b, b +< (i, v)} within Domain a and Domain p,
/// i in Domain b, and
///     v * (a,,b) - p,,b  >  v * (a,,(b +< (i,v))) - p,,(b +< (i,v)).
/// Only v for which b +< (i, v) lies in the domain matter, so candidates are
/// read off the domain itself.
inline std::optional<Dom4Violation> find_dom4_violation(const Value& i,
                                                        const Relation& a,
                                                        const Relation& p) {
    Value shared = set_intersection(domain(a), domain(p));
    std::map<Value, std::vector<Relation>> by_reduced;
    for (const auto& bv : shared.elements()) {
        Relation b(bv);
        if (domain(b).contains(i)) {
            by_reduced[single_outside(b, i).value()].push_back(b);
        }
    }
    for (const auto& bv : shared.elements()) {
        Relation b(bv);
        if (!domain(b).contains(i)) {
            continue;
        }
        auto it = by_reduced.find(single_outside(b, i).value());
        for (const auto& truthful : it->second) {
            Value v = eval_rel(truthful, i);
            if (v.is_undefined()) {
                continue;  // several bids at i: not of the form b +< (i, v)
            }
            if (!v.is_number()) {
                throw DomainError("dom4: non-numeric bid");
            }
            const Rational& val = v.as_number();
            Rational deviating = val * detail::number_at(a, bv, "a,,b") -
                                 detail::number_at(p, bv, "p,,b");
            Rational honest = val * detail::number_at(a, truthful.value(), "a,,b") -
                              detail::number_at(p, truthful.value(), "p,,b");
            if (deviating > honest) {
                return Dom4Violation{b, v};
            }
        }
    }
    return std::nullopt;
}

/// Weak dominance of truthful bidding for bidder i.
inline bool dom4_check(const Value& i, const Relation& a, const Relation& p) {
    return !find_dom4_violation(i, a, p).has_value();
}

/// Every element of x is a right-unique relation.
inline bool functional(const Value& x) {
    for (const auto& e : x.elements()) {
        if (!e.is_set()) {
            return false;
        }
        for (const auto& m : e.elements()) {
            if (!m.is_pair()) {
                return false;
            }
        }
        if (!runiq(Relation::unchecked(e))) {
            return false;
        }
    }
    return true;
}

/// First bid vector b in Domain a and Domain p at which
///     p,,b = (a,,b - a1) * w(b -- i) + t(b -- i)
/// fails. w and t are tables keyed by reduced bids; a reduced bid reached
/// but missing from either table is a DomainError.
inline std::optional<Relation> find_genvick_violation(const Value& i,
                                                      const Relation& a,
                                                      const Relation& p,
                                                      const Relation& w,
                                                      const Relation& t,
                                                      const Rational& a1) {
    Value shared = set_intersection(domain(a), domain(p));
    for (const auto& bv : shared.elements()) {
        Relation b(bv);
        Value reduced = single_outside(b, i).value();
        Rational wv = detail::number_at(w, reduced, "w(b--i)");
        Rational tv = detail::number_at(t, reduced, "t(b--i)");
        Rational lhs = detail::number_at(p, bv, "p,,b");
        Rational rhs = (detail::number_at(a, bv, "a,,b") - a1) * wv + tv;
        if (lhs != rhs) {
            return b;
        }
    }
    return std::nullopt;
}

inline bool genvick_check(const Value& i, const Relation& a, const Relation& p,
                          const Relation& w, const Relation& t,
                          const Rational& a1) {
    return !find_genvick_violation(i, a, p, w, t, a1).has_value();
}

/// Triple (Domain b, b -- i, a,,b) encoded as nested pairs.
inline Value reduced_triple(const Value& bidders, const Value& reduced,
                            const Value& allocation) {
    return Value::pair(bidders, Value::pair(reduced, allocation));
}

/// {(b, (Domain b, b outside {i}, a,,b)) | b in Domain a}
inline Relation reducedbid(const Value& i, const Relation& a) {
    std::vector<Value> out;
    const Value dom = domain(a);
    for (const auto& bv : dom.elements()) {
        Relation b(bv);
        out.push_back(Value::pair(
            bv, reduced_triple(domain(b), single_outside(b, i).value(),
                               eval_rel(a, bv))));
    }
    return Relation::unchecked(Value::set_from_sorted(std::move(out)));
}

/// (projector (reducedbid i a)^-1) O (quotient p (Kernel (reducedbid i a)) Id)
///   O (projector Id)^-1, with Id the identity on Range p.
/// Maps a reduced triple to the price charged on its class of bid vectors.
inline Relation reducedprice(const Relation& p, const Value& i, const Relation& a) {
    Relation rb = reducedbid(i, a);
    Relation id = identity(range(p));
    return compose(compose(projector(converse(rb)), quotient(p, kernel(rb), id)),
                   converse(projector(id)));
}

/// The fee table t extracted from reducedprice:
///     t(x) = reducedprice p i a ,, ({i} U Domain x, x, Min (Range a))
/// over every reduced bid reached from Domain a and Domain p. Reduced bids
/// where that lookup is Undefined (no bid of i loses against x) are left
/// out of `fee` and listed in `unresolved`.
struct FeeExtraction {
    Relation fee;
    Value unresolved;
};

inline FeeExtraction extract_fee(const Relation& p, const Value& i,
                                 const Relation& a) {
    Relation rp = reducedprice(p, i, a);
    Value losing = min_of(range(a));
    Value shared = set_intersection(domain(a), domain(p));
    std::vector<Value> reduced;
    for (const auto& bv : shared.elements()) {
        reduced.push_back(single_outside(Relation(bv), i).value());
    }
    std::vector<Value> fee;
    std::vector<Value> unresolved;
    const Value reduced_set = Value::set(std::move(reduced));
    for (const auto& x : reduced_set.elements()) {
        Value key = reduced_triple(set_insert(domain(Relation(x)), i), x, losing);
        Value price = eval_rel(rp, key);
        if (price.is_undefined()) {
            unresolved.push_back(x);
        } else {
            fee.push_back(Value::pair(x, price));
        }
    }
    return {Relation::unchecked(Value::set_from_sorted(std::move(fee))),
            Value::set_from_sorted(std::move(unresolved))};
}

/// Fills the unresolved fee entries. At such a reduced bid x the losing
/// price is never observed, so the fee is pinned only by the equation
/// itself: take p,,b - (a,,b - a1) * w(x) at the least b with b -- i = x.
/// genvick_check then still demands that the other bids of the class agree.
inline Relation complete_fee(const FeeExtraction& extraction, const Value& i,
                             const Relation& a, const Relation& p,
                             const Relation& w, const Rational& a1) {
    std::vector<Value> fee(extraction.fee.pairs().begin(),
                           extraction.fee.pairs().end());
    if (extraction.unresolved.empty()) {
        return extraction.fee;
    }
    Value shared = set_intersection(domain(a), domain(p));
    for (const auto& x : extraction.unresolved.elements()) {
        for (const auto& bv : shared.elements()) {
            if (single_outside(Relation(bv), i).value() == x) {
                Rational forced =
                    detail::number_at(p, bv, "p,,b") -
                    (detail::number_at(a, bv, "a,,b") - a1) *
                        detail::number_at(w, x, "w(b--i)");
                fee.push_back(Value::pair(x, Value::number(forced)));
                break;
            }
        }
    }
    return Relation::unchecked(Value::set(std::move(fee)));
}

/// w(b -- i) = Max (Range (b -- i)) over the reduced bids reached from
/// Domain a.
inline Relation highest_competing_bid_table(const Value& i, const Relation& a) {
    std::vector<Value> out;
    const Value dom = domain(a);
    for (const auto& bv : dom.elements()) {
        Relation reduced = single_outside(Relation(bv), i);
        out.push_back(Value::pair(reduced.value(), max_of(range(reduced))));
    }
    return Relation::unchecked(Value::set(std::move(out)));
}

}  // namespace vickset
