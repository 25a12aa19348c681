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

#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "vickset/enumeration.hpp"
#include "vickset/quotient.hpp"
#include "vickset/relation.hpp"
#include "vickset/value.hpp"

// Finite universes for exhaustive and sampled checking. Atoms are the
// integers 0..n-1.

namespace vickset::universe {

inline Value atoms(std::size_t n) {
    std::vector<Value> out;
    for (std::size_t k = 0; k < n; ++k) {
        out.push_back(Value::integer(static_cast<std::int64_t>(k)));
    }
    return Value::set_from_sorted(std::move(out));
}

/// All 2^(|X||Y|) relations between X and Y.
inline std::vector<Relation> all_relations(const Value& x, const Value& y) {
    std::vector<Relation> out;
    for_each_subset(cartesian_product(x, y), [&](const Value& s) {
        out.push_back(Relation::unchecked(s));
        return true;
    });
    return out;
}

/// Right-unique relations from subsets of X into Y.
inline std::vector<Relation> all_partial_functions(const Value& x,
                                                   const Value& y) {
    std::vector<Relation> out;
    for (auto& r : all_relations(x, y)) {
        if (runiq(r)) {
            out.push_back(std::move(r));
        }
    }
    return out;
}

/// Equivalences on exactly `carrier`, found by filtering all relations on it.
inline std::vector<Relation> all_equivalences(const Value& carrier) {
    std::vector<Relation> out;
    for (auto& r : all_relations(carrier, carrier)) {
        if (is_equivalence(r, carrier)) {
            out.push_back(std::move(r));
        }
    }
    return out;
}

/// Symmetric transitive relations within carrier x carrier (equivalences on
/// some subset of the carrier).
inline std::vector<Relation> all_partial_equivalences(const Value& carrier) {
    std::vector<Relation> out;
    for (auto& r : all_relations(carrier, carrier)) {
        if (is_symmetric(r) && is_transitive(r)) {
            out.push_back(std::move(r));
        }
    }
    return out;
}

/// Seeded generator; each law derives its own stream from (seed, law id).
class Rng {
  public:
    Rng(std::uint64_t seed, std::string_view stream) {
        std::uint64_t h = 1469598103934665603ULL;
        for (char c : stream) {
            h = (h ^ static_cast<unsigned char>(c)) * 1099511628211ULL;
        }
        engine_.seed(seed ^ h);
    }

    std::uint64_t below(std::uint64_t n) {
        return std::uniform_int_distribution<std::uint64_t>(0, n - 1)(engine_);
    }

    bool coin() { return below(2) == 1; }

  private:
    std::mt19937_64 engine_;
};

/// Each pair of X x Y included independently with probability 1/2.
inline Relation random_relation(Rng& rng, const Value& x, const Value& y) {
    std::vector<Value> out;
    const Value product = cartesian_product(x, y);
    for (const auto& p : product.elements()) {
        if (rng.coin()) {
            out.push_back(p);
        }
    }
    return Relation::unchecked(Value::set_from_sorted(std::move(out)));
}

/// Random nested Value mixing every kind; depth bounds the nesting.
inline Value random_value(Rng& rng, int depth) {
    std::uint64_t pick = rng.below(depth > 0 ? 6 : 3);
    switch (pick) {
        case 0:
            return Value::integer(static_cast<std::int64_t>(rng.below(5)) - 2);
        case 1:
            return Value::rational(static_cast<std::int64_t>(rng.below(7)) - 3,
                                   static_cast<std::int64_t>(rng.below(3)) + 1);
        case 2:
            return Value::symbol(std::string(1, static_cast<char>('a' + rng.below(3))));
        case 3:
            return Value::pair(random_value(rng, depth - 1),
                               random_value(rng, depth - 1));
        default: {
            std::vector<Value> elems;
            std::uint64_t n = rng.below(4);
            for (std::uint64_t k = 0; k < n; ++k) {
                elems.push_back(random_value(rng, depth - 1));
            }
            return Value::set(std::move(elems));
        }
    }
}

}  // namespace vickset::universe
