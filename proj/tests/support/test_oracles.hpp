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

// Reference computations for tests. Nothing here calls into the library's
// algorithms; relations are bitmasks over atoms 0..n-1 and instances are
// plain tables, so agreement with the library is evidence, not tautology.

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "vickset/rational.hpp"
#include "vickset/value.hpp"

namespace testing_oracle {

/// A relation over atoms(nx) x atoms(ny); bit x * ny + y encodes (x, y).
struct MaskRel {
    int nx;
    int ny;
    std::uint32_t bits;

    [[nodiscard]] bool has(int x, int y) const { return (bits >> (x * ny + y)) & 1U; }

    [[nodiscard]] std::uint32_t row(int x) const {
        return (bits >> (x * ny)) & ((1U << ny) - 1U);
    }

    [[nodiscard]] vickset::Value value() const {
        std::vector<vickset::Value> pairs;
        for (int x = 0; x < nx; ++x) {
            for (int y = 0; y < ny; ++y) {
                if (has(x, y)) {
                    pairs.push_back(vickset::Value::pair(vickset::Value::integer(x),
                                                         vickset::Value::integer(y)));
                }
            }
        }
        return vickset::Value::set(pairs);
    }
};

inline MaskRel paste(const MaskRel& p, const MaskRel& q) {
    std::uint32_t out = q.bits;
    for (int x = 0; x < p.nx; ++x) {
        if (q.row(x) == 0) {
            out |= p.row(x) << (x * p.ny);
        }
    }
    return {p.nx, p.ny, out};
}

inline bool runiq(const MaskRel& r) {
    for (int x = 0; x < r.nx; ++x) {
        std::uint32_t row = r.row(x);
        if ((row & (row - 1U)) != 0) {
            return false;
        }
    }
    return true;
}

inline int domain_size(const MaskRel& r) {
    int n = 0;
    for (int x = 0; x < r.nx; ++x) {
        n += r.row(x) != 0 ? 1 : 0;
    }
    return n;
}

inline int popcount(std::uint32_t v) { return __builtin_popcount(v); }

/// Bell numbers from the Bell triangle.
inline std::vector<std::uint64_t> bell_numbers(int upto) {
    std::vector<std::uint64_t> out{1};
    std::vector<std::uint64_t> row{1};
    for (int n = 1; n <= upto; ++n) {
        std::vector<std::uint64_t> next{row.back()};
        for (auto v : row) {
            next.push_back(next.back() + v);
        }
        out.push_back(next.front());
        row = next;
    }
    return out;
}

inline std::uint64_t falling_factorial(int n, int k) {
    if (k > n) {
        return 0;
    }
    std::uint64_t r = 1;
    for (int j = 0; j < k; ++j) {
        r *= static_cast<std::uint64_t>(n - j);
    }
    return r;
}

/// Goods are bit positions, bidders 0..n-1. Unlisted bundles are worth 0.
struct TableInstance {
    int goods;
    int bidders;
    std::map<std::pair<int, std::uint32_t>, vickset::Rational> values;

    [[nodiscard]] vickset::Rational value(int bidder, std::uint32_t bundle) const {
        auto it = values.find({bidder, bundle});
        return it == values.end() ? vickset::Rational(0) : it->second;
    }
};

/// Best welfare when every good goes to one of the bidders in `allowed`
/// (bitmask over bidders); 0 when nobody is allowed.
inline vickset::Rational best_welfare(const TableInstance& inst, std::uint32_t allowed) {
    if (allowed == 0) {
        return 0;
    }
    std::vector<int> who;
    for (int n = 0; n < inst.bidders; ++n) {
        if ((allowed >> n) & 1U) {
            who.push_back(n);
        }
    }
    vickset::Rational best = -1;
    std::vector<int> pick(static_cast<std::size_t>(inst.goods), 0);
    while (true) {
        std::vector<std::uint32_t> bundle(static_cast<std::size_t>(inst.bidders), 0);
        for (int g = 0; g < inst.goods; ++g) {
            bundle[static_cast<std::size_t>(who[static_cast<std::size_t>(pick[g])])] |= 1U << g;
        }
        vickset::Rational total = 0;
        for (int n : who) {
            total += inst.value(n, bundle[static_cast<std::size_t>(n)]);
        }
        if (best < total) {
            best = total;
        }
        int g = 0;
        while (g < inst.goods && ++pick[static_cast<std::size_t>(g)] ==
                                     static_cast<int>(who.size())) {
            pick[static_cast<std::size_t>(g)] = 0;
            ++g;
        }
        if (g == inst.goods) {
            break;
        }
    }
    return best;
}

}  // namespace testing_oracle
