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

#include <algorithm>
#include <vector>

#include "vickset/rational.hpp"
#include "vickset/text.hpp"
#include "vickset/universe.hpp"
#include "vickset/value.hpp"

namespace {

using vickset::Rational;
using vickset::Value;

Value I(std::int64_t n) { return Value::integer(n); }
Value S(std::initializer_list<Value> xs) { return Value::set(xs); }

TEST(Rational, ReducesToLowestTerms) {
    Rational r(2, 4);
    EXPECT_EQ(r.numerator(), 1);
    EXPECT_EQ(r.denominator(), 2);
    Rational n(3, -6);
    EXPECT_EQ(n.numerator(), -1);
    EXPECT_EQ(n.denominator(), 2);
    EXPECT_EQ(Rational(1, 3) + Rational(1, 6), Rational(1, 2));
    EXPECT_EQ(Rational(3, 4).to_string(), "3/4");
    EXPECT_EQ(Rational(8, 4).to_string(), "2");
}

TEST(Rational, ZeroDenominatorIsRejected) {
    EXPECT_THROW(Rational(1, 0), vickset::ValidationError);
    EXPECT_THROW(Rational(1) / Rational(0), vickset::DomainError);
}

TEST(Rational, OverflowIsReported) {
    Rational big(INT64_MAX);
    EXPECT_THROW(big + Rational(1), vickset::DomainError);
    EXPECT_THROW(big * Rational(2), vickset::DomainError);
}

TEST(Canonicalize, SetIsSortedAndDeduplicated) {
    EXPECT_EQ(vickset::to_text(vickset::parse_value(R"(["set", 2, 1, 1])")),
              R"(["set", 1, 2])");
    EXPECT_EQ(S({I(2), I(1), I(1)}), S({I(1), I(2)}));
}

TEST(Canonicalize, PairWithEmptySetIsUnchanged) {
    Value v = Value::pair(I(1), Value::empty_set());
    EXPECT_EQ(vickset::to_text(v), R"(["pair", 1, ["set"]])");
    EXPECT_EQ(vickset::canonicalize(v), v);
}

TEST(Canonicalize, RationalInLowestTerms) {
    Value v = vickset::parse_value("2/4");
    EXPECT_EQ(v, Value::rational(1, 2));
    EXPECT_EQ(vickset::to_text(v), "1/2");
    EXPECT_THROW(vickset::parse_value("1/0"), vickset::ValidationError);
}

TEST(Canonicalize, IntegralRationalIsAnInteger) {
    EXPECT_EQ(vickset::parse_value("4/2"), I(2));
}

TEST(Canonicalize, IsIdempotent) {
    vickset::universe::Rng rng(7, "idempotent");
    for (int k = 0; k < 200; ++k) {
        Value v = vickset::universe::random_value(rng, 3);
        EXPECT_EQ(vickset::canonicalize(vickset::canonicalize(v)), v);
    }
}

TEST(Order, KindsAreRankedNumbersSymbolsPairsSets) {
    Value num = I(100);
    Value sym = Value::symbol("a");
    Value pair = Value::pair(I(0), I(0));
    Value set = Value::empty_set();
    EXPECT_LT(num, sym);
    EXPECT_LT(sym, pair);
    EXPECT_LT(pair, set);
    EXPECT_LT(Value::rational(1, 2), I(1));
    EXPECT_LT(Value::pair(I(0), I(5)), Value::pair(I(1), I(0)));
    EXPECT_LT(S({I(1)}), S({I(1), I(2)}));
    EXPECT_LT(S({I(1), I(2)}), S({I(2)}));
}

TEST(Order, RandomTriplesAreConsistent) {
    vickset::universe::Rng rng(11, "order");
    for (int k = 0; k < 500; ++k) {
        Value a = vickset::universe::random_value(rng, 2);
        Value b = vickset::universe::random_value(rng, 2);
        Value c = vickset::universe::random_value(rng, 2);
        EXPECT_EQ((a <=> b) == 0, a == b);
        EXPECT_EQ(a < b, b > a);
        if (a <= b && b <= c) {
            EXPECT_LE(a, c);
        }
        EXPECT_EQ(a == b, vickset::to_text(a) == vickset::to_text(b));
    }
}

TEST(SetOps, KnownExamples) {
    EXPECT_EQ(vickset::set_union(S({I(1), I(2)}), S({I(2), I(3)})), S({I(1), I(2), I(3)}));
    EXPECT_EQ(vickset::cartesian_product(S({I(1)}), S({I(2), I(3)})),
              S({Value::pair(I(1), I(2)), Value::pair(I(1), I(3))}));
    EXPECT_EQ(vickset::set_difference(S({}), S({I(1)})), S({}));
    EXPECT_EQ(vickset::set_intersection(S({I(1), I(2)}), S({I(2), I(3)})), S({I(2)}));
}

TEST(SetOps, NonSetArgumentIsATypeError) {
    EXPECT_THROW(vickset::set_union(I(1), S({})), vickset::TypeError);
    EXPECT_THROW(vickset::cartesian_product(S({}), Value::symbol("x")), vickset::TypeError);
}

TEST(TheElem, SingletonOnly) {
    EXPECT_EQ(vickset::the_elem(S({I(7)})), I(7));
    EXPECT_TRUE(vickset::the_elem(S({})).is_undefined());
    EXPECT_TRUE(vickset::the_elem(S({I(1), I(2)})).is_undefined());
}

TEST(MinMax, NumericSets) {
    Value x = S({I(3), Value::rational(-1, 2), I(2)});
    EXPECT_EQ(vickset::min_of(x), Value::rational(-1, 2));
    EXPECT_EQ(vickset::max_of(x), I(3));
    EXPECT_THROW(vickset::min_of(S({})), vickset::DomainError);
    EXPECT_THROW(vickset::max_of(S({Value::symbol("a")})), vickset::DomainError);
}

TEST(Text, ParsesRelationIntoCanonicalOrder) {
    Value v = vickset::parse_value(R"(["set",["pair",1,10],["pair",0,5]])");
    EXPECT_EQ(vickset::to_text(v), R"(["set", ["pair", 0, 5], ["pair", 1, 10]])");
    EXPECT_EQ(vickset::parse_value(R"(["set",1,1])"), S({I(1)}));
}

TEST(Text, SymbolsAreEscaped) {
    Value v = Value::symbol("a\"b\\c\n");
    EXPECT_EQ(vickset::to_text(v), R"("a\"b\\c\n")");
    EXPECT_EQ(vickset::parse_value(vickset::to_text(v)), v);
}

TEST(Text, RoundTripsRandomValues) {
    vickset::universe::Rng rng(3, "roundtrip");
    for (int k = 0; k < 500; ++k) {
        Value v = vickset::universe::random_value(rng, 4);
        EXPECT_EQ(vickset::parse_value(vickset::to_text(v)), v);
    }
}

TEST(Text, MalformedInputReportsPosition) {
    try {
        vickset::parse_value(R"(["set", 1, ["tuple", 2]])");
        FAIL() << "expected a parse error";
    } catch (const vickset::ParseError& e) {
        EXPECT_EQ(e.position(), 11U);
    }
    EXPECT_THROW(vickset::parse_value(R"(["pair", 1])"), vickset::ParseError);
    EXPECT_THROW(vickset::parse_value("1 2"), vickset::ParseError);
    EXPECT_THROW(vickset::parse_value(R"(["set", 1)"), vickset::ParseError);
    EXPECT_THROW(vickset::parse_value(R"("open)"), vickset::ParseError);
    EXPECT_THROW(vickset::parse_value(""), vickset::ParseError);
}

TEST(Undefined, IsAReservedSymbol) {
    Value u = Value::undefined();
    EXPECT_TRUE(u.is_symbol());
    EXPECT_TRUE(u.is_undefined());
    EXPECT_EQ(vickset::parse_value(vickset::to_text(u)), u);
}

}  // namespace
