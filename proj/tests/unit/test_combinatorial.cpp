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

#include <gtest/gtest.h>

#include <set>
#include <vector>

#include "test_oracles.hpp"
#include "vickset/combinatorial.hpp"
#include "vickset/oracles.hpp"

namespace {

using vickset::CombinatorialInstance;
using vickset::Rational;
using vickset::Relation;
using vickset::Value;

Value I(std::int64_t n) { return Value::integer(n); }
Value Sym(const char* s) { return Value::symbol(s); }
Value S(std::initializer_list<Value> xs) { return Value::set(xs); }

CombinatorialInstance worked_example() {
    CombinatorialInstance inst;
    inst.goods = S({Sym("g1"), Sym("g2")});
    inst.bidders = S({I(1), I(2)});
    inst.valuation[{I(1), S({Sym("g1"), Sym("g2")})}] = 10;
    inst.valuation[{I(1), S({Sym("g1")})}] = 6;
    inst.valuation[{I(1), S({Sym("g2")})}] = 6;
    inst.valuation[{I(2), S({Sym("g1"), Sym("g2")})}] = 7;
    inst.valuation[{I(2), S({Sym("g1")})}] = 5;
    inst.valuation[{I(2), S({Sym("g2")})}] = 5;
    return inst;
}

/// Goods atom k becomes bit k, bidder n becomes index n - 1.
testing_oracle::TableInstance as_table(const CombinatorialInstance& inst) {
    testing_oracle::TableInstance t{static_cast<int>(inst.goods.size()),
                                    static_cast<int>(inst.bidders.size()),
                                    {}};
    for (const auto& [key, v] : inst.valuation) {
        std::uint32_t mask = 0;
        for (const auto& g : key.second.elements()) {
            mask |= 1U << g.as_number().numerator();
        }
        t.values[{static_cast<int>(key.first.as_number().numerator()) - 1, mask}] = v;
    }
    return t;
}

TEST(PossibleAllocations, KnownCounts) {
    EXPECT_EQ(vickset::possible_allocations(S({I(0), I(1)}), S({I(1), I(2)})).size(), 4U);
    EXPECT_EQ(vickset::possible_allocations(S({I(0)}), S({I(1), I(2), I(3)})).size(), 3U);
    EXPECT_EQ(vickset::possible_allocations(S({I(0), I(1)}), S({I(1)})).size(), 1U);
}

// Every allocation hands every good to a bidder and no bidder gets two
// blocks, so allocations correspond to maps goods -> bidders: |N|^|G|.
TEST(PossibleAllocations, CountsAndShape) {
    for (std::size_t g = 1; g <= 4; ++g) {
        for (std::size_t n = 1; n <= 3; ++n) {
            Value goods = vickset::universe::atoms(g);
            Value bidders = vickset::universe::atoms(n);
            auto all = vickset::possible_allocations(goods, bidders);
            std::uint64_t expected = 1;
            for (std::size_t k = 0; k < g; ++k) {
                expected *= n;
            }
            EXPECT_EQ(all.size(), expected);
            std::set<Value> distinct;
            for (const auto& a : all) {
                distinct.insert(a.value());
                EXPECT_TRUE(vickset::is_partition_of(vickset::domain(a), goods));
                EXPECT_TRUE(vickset::runiq(a));
                EXPECT_TRUE(vickset::runiq(vickset::converse(a)));
                EXPECT_TRUE(vickset::is_subset(vickset::range(a), bidders));
            }
            EXPECT_EQ(distinct.size(), all.size());
        }
    }
}

TEST(PossibleAllocations, Errors) {
    EXPECT_THROW(vickset::possible_allocations(S({}), S({I(1)})), vickset::PreconditionError);
    EXPECT_THROW(vickset::possible_allocations(S({I(0)}), S({})), vickset::PreconditionError);
    EXPECT_THROW(vickset::possible_allocations(vickset::universe::atoms(7), S({I(1)})),
                 vickset::CapExceeded);
}

TEST(ClearVickrey, WorkedExample) {
    auto inst = worked_example();
    auto outcome = vickset::clear_vickrey(inst);
    EXPECT_EQ(outcome.welfare, Rational(11));
    EXPECT_EQ(vickset::eval_rel(outcome.payments, I(1)), I(2));
    EXPECT_EQ(vickset::eval_rel(outcome.payments, I(2)), I(4));
    EXPECT_EQ(vickset::domain(outcome.allocation).size(), 2U);

    // Recomputed from the table oracle: best welfare 11; without bidder 1
    // the best is 7, without bidder 2 it is 10; the others hold 5 and 6.
    testing_oracle::TableInstance t{2, 2, {}};
    t.values[{0, 3}] = 10;
    t.values[{0, 1}] = 6;
    t.values[{0, 2}] = 6;
    t.values[{1, 3}] = 7;
    t.values[{1, 1}] = 5;
    t.values[{1, 2}] = 5;
    EXPECT_EQ(testing_oracle::best_welfare(t, 3), Rational(11));
    EXPECT_EQ(testing_oracle::best_welfare(t, 2) - Rational(5), Rational(2));
    EXPECT_EQ(testing_oracle::best_welfare(t, 1) - Rational(6), Rational(4));
}

TEST(ClearVickrey, SingleBidderTakesEverythingForFree) {
    CombinatorialInstance inst;
    inst.goods = S({I(0), I(1), I(2)});
    inst.bidders = S({I(1)});
    inst.valuation[{I(1), S({I(0)})}] = 3;
    inst.valuation[{I(1), S({I(0), I(1), I(2)})}] = 5;
    auto outcome = vickset::clear_vickrey(inst);
    EXPECT_EQ(outcome.allocation, Relation(S({Value::pair(inst.goods, I(1))})));
    EXPECT_EQ(vickset::eval_rel(outcome.payments, I(1)), I(0));
    EXPECT_EQ(outcome.welfare, Rational(5));
}

TEST(ClearVickrey, AllZeroValuationsPayNothing) {
    CombinatorialInstance inst;
    inst.goods = S({I(0), I(1)});
    inst.bidders = S({I(1), I(2), I(3)});
    auto outcome = vickset::clear_vickrey(inst);
    for (const auto& n : inst.bidders.elements()) {
        EXPECT_EQ(vickset::eval_rel(outcome.payments, n), I(0));
    }
    EXPECT_EQ(outcome.welfare, Rational(0));
}

TEST(ClearVickrey, TiesGoToTheLeastAllocation) {
    CombinatorialInstance inst;
    inst.goods = S({I(0)});
    inst.bidders = S({I(1), I(2)});
    inst.valuation[{I(1), S({I(0)})}] = 4;
    inst.valuation[{I(2), S({I(0)})}] = 4;
    auto outcome = vickset::clear_vickrey(inst);
    EXPECT_EQ(outcome.allocation, Relation(S({Value::pair(S({I(0)}), I(1))})));
    EXPECT_EQ(vickset::eval_rel(outcome.payments, I(1)), I(4));
    EXPECT_EQ(vickset::eval_rel(outcome.payments, I(2)), I(0));
}

// Without free disposal a bidder can be charged a negative amount: bidder 2
// values {g2} at 5 but the whole set at 0, and every allocation must place
// both goods.
TEST(ClearVickrey, NonMonotoneValuationsCanYieldNegativePayments) {
    CombinatorialInstance inst;
    inst.goods = S({Sym("g1"), Sym("g2")});
    inst.bidders = S({I(1), I(2)});
    inst.valuation[{I(1), S({Sym("g1")})}] = 10;
    inst.valuation[{I(2), S({Sym("g2")})}] = 5;
    auto outcome = vickset::clear_vickrey(inst);
    EXPECT_EQ(outcome.welfare, Rational(15));
    EXPECT_EQ(vickset::eval_rel(outcome.payments, I(1)), I(-5));
}

TEST(ClearVickrey, RandomMonotoneInstancesAgainstTableOracle) {
    vickset::universe::Rng rng(99, "table-oracle");
    for (int k = 0; k < 150; ++k) {
        std::size_t g = 1 + rng.below(4);
        std::size_t n = 1 + rng.below(3);
        auto inst = vickset::oracle::random_monotone_instance(rng, g, n, 4);
        auto table = as_table(inst);
        auto outcome = vickset::clear_vickrey(inst);
        std::uint32_t everyone = (1U << n) - 1U;
        ASSERT_EQ(outcome.welfare, testing_oracle::best_welfare(table, everyone));
        for (const auto& bidder : inst.bidders.elements()) {
            int idx = static_cast<int>(bidder.as_number().numerator()) - 1;
            Rational others = 0;
            Rational own = 0;
            for (const auto& entry : outcome.allocation.pairs()) {
                Rational v = inst.value(entry.second(), entry.first());
                (entry.second() == bidder ? own : others) += v;
            }
            Rational expected =
                testing_oracle::best_welfare(table, everyone & ~(1U << idx)) - others;
            Rational paid = vickset::eval_rel(outcome.payments, bidder).as_number();
            EXPECT_EQ(paid, expected);
            EXPECT_GE(paid, Rational(0));
            EXPECT_LE(paid, own);
        }
    }
}

TEST(Instance, ValidationErrors) {
    auto inst = worked_example();
    auto bad = inst;
    bad.valuation[{I(3), S({Sym("g1")})}] = 1;
    EXPECT_THROW(bad.validate(), vickset::ValidationError);
    bad = inst;
    bad.valuation[{I(1), S({Sym("g9")})}] = 1;
    EXPECT_THROW(bad.validate(), vickset::ValidationError);
    bad = inst;
    bad.valuation[{I(1), S({Sym("g1")})}] = -1;
    EXPECT_THROW(bad.validate(), vickset::ValidationError);
    bad = inst;
    bad.valuation[{I(1), S({})}] = 1;
    EXPECT_THROW(bad.validate(), vickset::ValidationError);
    bad = inst;
    bad.goods = vickset::universe::atoms(7);
    bad.valuation.clear();
    EXPECT_THROW(bad.validate(), vickset::CapExceeded);
    EXPECT_THROW(vickset::clear_vickrey(bad), vickset::CapExceeded);
}

TEST(Instance, ValueEncodingRoundTrips) {
    auto inst = worked_example();
    auto back = vickset::instance_from_value(vickset::instance_to_value(inst));
    EXPECT_EQ(back.goods, inst.goods);
    EXPECT_EQ(back.bidders, inst.bidders);
    EXPECT_EQ(back.valuation, inst.valuation);
}

TEST(Oracle, AssignmentOracleAgreesOnWorkedExample) {
    auto want = vickset::oracle::vickrey(worked_example());
    auto got = vickset::clear_vickrey(worked_example());
    EXPECT_EQ(got.allocation, want.allocation);
    EXPECT_EQ(got.payments, want.payments);
    EXPECT_EQ(got.welfare, want.welfare);
}

}  // namespace
