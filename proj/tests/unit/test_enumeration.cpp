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
#include "vickset/enumeration.hpp"
#include "vickset/universe.hpp"

namespace {

using vickset::PartitionList;
using vickset::Relation;
using vickset::Value;

Value I(std::int64_t n) { return Value::integer(n); }
Value Sym(const char* s) { return Value::symbol(s); }
Value S(std::initializer_list<Value> xs) { return Value::set(xs); }

TEST(AllSubsets, KnownExamples) {
    EXPECT_EQ(vickset::all_subsets(S({})), S({S({})}));
    EXPECT_EQ(vickset::all_subsets(S({I(1)})), S({S({}), S({I(1)})}));
    EXPECT_EQ(vickset::all_subsets(S({I(1), I(2), I(3)})).size(), 8U);
}

TEST(InjectionsOracle, KnownExamples) {
    EXPECT_EQ(vickset::injections_oracle(S({}), S({I(1), I(2)})), S({S({})}));
    EXPECT_EQ(vickset::injections_oracle(S({Sym("a"), Sym("b")}), S({I(1), I(2), I(3)})).size(),
              testing_oracle::falling_factorial(3, 2));
    EXPECT_EQ(vickset::injections_oracle(S({Sym("a"), Sym("b")}), S({I(1)})), S({}));
}

TEST(InjectionsOracle, CountsAreFallingFactorials) {
    for (int nx = 0; nx <= 4; ++nx) {
        for (int ny = 0; ny <= 4; ++ny) {
            Value y = vickset::universe::atoms(static_cast<std::size_t>(ny));
            std::vector<Value> xs;
            for (int k = 0; k < nx; ++k) {
                xs.push_back(Sym(std::string(1, static_cast<char>('a' + k)).c_str()));
            }
            Value oracle = vickset::injections_oracle(Value::set(xs), y);
            EXPECT_EQ(oracle.size(), testing_oracle::falling_factorial(ny, nx))
                << nx << "x" << ny;
            for (const auto& r : oracle.elements()) {
                Relation rel(r);
                EXPECT_TRUE(vickset::runiq(rel));
                EXPECT_TRUE(vickset::runiq(vickset::converse(rel)));
            }
        }
    }
}

TEST(InjectionsAlg, KnownExamples) {
    std::vector<Value> none;
    auto base = vickset::injections_alg(none, S({I(1), I(2)}));
    ASSERT_EQ(base.size(), 1U);
    EXPECT_TRUE(base[0].empty());

    std::vector<Value> ab{Sym("a"), Sym("b")};
    auto alg = vickset::injections_alg(ab, S({I(1), I(2), I(3)}));
    std::vector<Value> as_values;
    for (const auto& r : alg) {
        as_values.push_back(r.value());
    }
    EXPECT_EQ(Value::set(as_values), vickset::injections_oracle(Value::set(ab), S({I(1), I(2), I(3)})));
    EXPECT_EQ(alg.size(), 6U);

    std::vector<Value> a{Sym("a")};
    auto one = vickset::injections_alg(a, S({I(1)}));
    ASSERT_EQ(one.size(), 1U);
    EXPECT_EQ(one[0].value(), S({Value::pair(Sym("a"), I(1))}));
}

TEST(InjectionsAlg, DeterministicOrderFollowsTargetOrder) {
    std::vector<Value> xs{I(1)};
    auto alg = vickset::injections_alg(xs, S({Sym("c"), Sym("a"), Sym("b")}));
    ASSERT_EQ(alg.size(), 3U);
    EXPECT_EQ(vickset::range(alg[0]), S({Sym("a")}));
    EXPECT_EQ(vickset::range(alg[1]), S({Sym("b")}));
    EXPECT_EQ(vickset::range(alg[2]), S({Sym("c")}));
}

TEST(InjectionsAlg, DuplicateElementIsAPreconditionViolation) {
    std::vector<Value> xs{I(1), I(1)};
    EXPECT_THROW(vickset::injections_alg(xs, S({I(1), I(2)})), vickset::PreconditionError);
}

// With Y empty the base case still yields the empty injection for xs = [],
// and no injection otherwise; both sides agree there too.
TEST(InjectionsAlg, EmptyTargetSet) {
    std::vector<Value> none;
    EXPECT_EQ(vickset::injections_alg(none, S({})).size(), 1U);
    std::vector<Value> one{I(0)};
    EXPECT_TRUE(vickset::injections_alg(one, S({})).empty());
    EXPECT_EQ(vickset::injections_oracle(S({I(0)}), S({})), S({}));
}

TEST(InsertIntoMemberList, KnownExamples) {
    PartitionList twos{S({I(1)}), S({I(2)})};
    EXPECT_EQ(vickset::insert_into_member_list(I(3), twos, S({I(2)})),
              (PartitionList{S({I(2), I(3)}), S({I(1)})}));
    EXPECT_EQ(vickset::insert_into_member_list(I(3), PartitionList{S({I(1)})}, S({I(1)})),
              (PartitionList{S({I(1), I(3)})}));
    EXPECT_EQ(vickset::insert_into_member_list(I(9), twos, S({I(1)})),
              (PartitionList{S({I(1), I(9)}), S({I(2)})}));
    EXPECT_THROW(vickset::insert_into_member_list(I(9), twos, S({I(5)})),
                 vickset::PreconditionError);
}

TEST(CoarserPartitions, KnownExamples) {
    PartitionList twos{S({I(1)}), S({I(2)})};
    std::vector<PartitionList> want{
        {S({I(3)}), S({I(1)}), S({I(2)})},
        {S({I(1), I(3)}), S({I(2)})},
        {S({I(2), I(3)}), S({I(1)})},
    };
    EXPECT_EQ(vickset::coarser_partitions_with_list(I(3), twos), want);
    EXPECT_EQ(vickset::coarser_partitions_with_list(I(1), PartitionList{}),
              (std::vector<PartitionList>{{S({I(1)})}}));
    EXPECT_EQ(vickset::coarser_partitions_with_list(I(2), PartitionList{S({I(1)})}),
              (std::vector<PartitionList>{{S({I(2)}), S({I(1)})}, {S({I(1), I(2)})}}));
    EXPECT_THROW(vickset::coarser_partitions_with_list(I(1), twos),
                 vickset::PreconditionError);
}

TEST(AllPartitionsList, KnownExamples) {
    std::vector<Value> none;
    auto base = vickset::all_partitions_list(none);
    ASSERT_EQ(base.size(), 1U);
    EXPECT_TRUE(base[0].empty());
    std::vector<Value> a{Sym("a")};
    EXPECT_EQ(vickset::all_partitions_list(a),
              (std::vector<PartitionList>{{S({Sym("a")})}}));
    std::vector<Value> dup{I(1), I(2), I(1)};
    EXPECT_THROW(vickset::all_partitions_list(dup), vickset::PreconditionError);
}

TEST(AllPartitionsList, CountsAreBellNumbers) {
    auto bell = testing_oracle::bell_numbers(6);
    EXPECT_EQ(std::vector<std::uint64_t>(bell.begin(), bell.end()),
              (std::vector<std::uint64_t>{1, 1, 2, 5, 15, 52, 203}));
    for (std::size_t n = 0; n <= 6; ++n) {
        Value atoms = vickset::universe::atoms(n);
        std::vector<Value> xs(atoms.elements().begin(), atoms.elements().end());
        auto lists = vickset::all_partitions_list(xs);
        EXPECT_EQ(lists.size(), bell[n]);
        std::set<Value> distinct;
        for (const auto& p : lists) {
            EXPECT_TRUE(vickset::is_partition_of(vickset::blocks_as_set(p), atoms));
            distinct.insert(vickset::blocks_as_set(p));
        }
        EXPECT_EQ(distinct.size(), lists.size());
    }
}

TEST(IsPartition, KnownExamples) {
    EXPECT_TRUE(vickset::is_partition(S({S({I(1)}), S({I(2), I(3)})})));
    EXPECT_FALSE(vickset::is_partition(S({S({}), S({I(1)})})));
    EXPECT_FALSE(vickset::is_partition(S({S({I(1), I(2)}), S({I(2), I(3)})})));
    EXPECT_TRUE(vickset::is_partition_of(S({S({I(1)}), S({I(2)})}), S({I(1), I(2)})));
    EXPECT_FALSE(vickset::is_partition_of(S({S({I(1)})}), S({I(1), I(2)})));
}

// The axiomatic side read literally: filter every family of subsets.
Value partitions_by_literal_filter(const Value& a) {
    Value subsets = vickset::all_subsets(a);
    std::vector<Value> out;
    std::size_t n = subsets.size();
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        std::vector<Value> family;
        for (std::size_t k = 0; k < n; ++k) {
            if ((mask >> k) & 1U) {
                family.push_back(subsets.elements()[k]);
            }
        }
        Value f = Value::set(family);
        if (vickset::is_partition_of(f, a)) {
            out.push_back(f);
        }
    }
    return Value::set(out);
}

TEST(AllPartitionsOracle, MatchesLiteralFilterUpToFourElements) {
    for (std::size_t n = 0; n <= 4; ++n) {
        Value a = vickset::universe::atoms(n);
        EXPECT_EQ(vickset::all_partitions_oracle(a), partitions_by_literal_filter(a)) << n;
    }
}

TEST(AllPartitionsOracle, CapIsEnforced) {
    EXPECT_THROW(vickset::all_partitions_oracle(vickset::universe::atoms(7)),
                 vickset::CapExceeded);
    EXPECT_EQ(vickset::all_partitions_oracle(vickset::universe::atoms(6)).size(), 203U);
}

}  // namespace
