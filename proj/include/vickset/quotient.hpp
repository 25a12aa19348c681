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

#include <vector>

#include "vickset/error.hpp"
#include "vickset/relation.hpp"
#include "vickset/value.hpp"

namespace vickset {

/// projector R = {(x, R``{x}) | x in Domain R}: sends each point to its
/// class. Right-unique by construction.
inline Relation projector(const Relation& r) {
    std::vector<Value> out;
    const Value dom = domain(r);
    for (const auto& x : dom.elements()) {
        out.push_back(Value::pair(x, image_of(r, x)));
    }
    return Relation::unchecked(Value::set_from_sorted(std::move(out)));
}

/// Range (projector E): the set of classes.
inline Value classes(const Relation& e) { return range(projector(e)); }

/// quotient R P Q: the pairs (p, q) of a P-class and a Q-class such that
/// p x q meets R. Defined for any three relations.
inline Relation quotient(const Relation& r, const Relation& p, const Relation& q) {
    Value p_classes = classes(p);
    Value q_classes = classes(q);
    std::vector<Value> out;
    for (const auto& pc : p_classes.elements()) {
        for (const auto& qc : q_classes.elements()) {
            bool meets = false;
            for (const auto& xy : r.pairs()) {
                if (pc.contains(xy.first()) && qc.contains(xy.second())) {
                    meets = true;
                    break;
                }
            }
            if (meets) {
                out.push_back(Value::pair(pc, qc));
            }
        }
    }
    return Relation::unchecked(Value::set(std::move(out)));
}

/// compatible R P Q: R``(P``{x}) is contained in Q``(R``{x}) for every x.
/// Points outside Domain P and Domain R give an empty left side, so only
/// those two domains are scanned.
inline bool compatible(const Relation& r, const Relation& p, const Relation& q) {
    Value points = set_union(domain(p), domain(r));
    for (const auto& x : points.elements()) {
        Value lhs = image(r, image_of(p, x));
        Value rhs = image(q, image_of(r, x));
        if (!is_subset(lhs, rhs)) {
            return false;
        }
    }
    return true;
}

/// Kernel of a function: points of its domain identified when their values
/// agree. Throws PreconditionError unless `f` is right-unique.
inline Relation kernel(const Relation& f) {
    if (!runiq(f)) {
        throw PreconditionError("kernel: relation is not right-unique");
    }
    std::vector<Value> out;
    for (const auto& a : f.pairs()) {
        for (const auto& b : f.pairs()) {
            if (a.second() == b.second()) {
                out.push_back(Value::pair(a.first(), b.first()));
            }
        }
    }
    return Relation::unchecked(Value::set(std::move(out)));
}

inline bool is_symmetric(const Relation& e) {
    for (const auto& p : e.pairs()) {
        if (!e.contains(p.second(), p.first())) {
            return false;
        }
    }
    return true;
}

inline bool is_transitive(const Relation& e) {
    for (const auto& p : e.pairs()) {
        for (const auto& q : pairs_at(e, p.second())) {
            if (!e.contains(p.first(), q.second())) {
                return false;
            }
        }
    }
    return true;
}

inline bool is_reflexive_on(const Relation& e, const Value& carrier) {
    for (const auto& x : carrier.elements()) {
        if (!e.contains(x, x)) {
            return false;
        }
    }
    return true;
}

/// equiv carrier E: E is within carrier x carrier, reflexive on it,
/// symmetric and transitive.
inline bool is_equivalence(const Relation& e, const Value& carrier) {
    return is_subset(e.value(), cartesian_product(carrier, carrier)) &&
           is_reflexive_on(e, carrier) && is_symmetric(e) && is_transitive(e);
}

/// The equivalence whose classes are the given pairwise-disjoint blocks.
inline Relation equivalence_from_blocks(std::span<const Value> blocks) {
    std::vector<Value> out;
    for (const auto& block : blocks) {
        for (const auto& x : block.elements()) {
            for (const auto& y : block.elements()) {
                out.push_back(Value::pair(x, y));
            }
        }
    }
    return Relation::unchecked(Value::set(std::move(out)));
}

inline Relation equivalence_from_blocks(const Value& partition) {
    return equivalence_from_blocks(partition.elements());
}

}  // namespace vickset
