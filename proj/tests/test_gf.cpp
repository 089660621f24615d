// Copyright 2026 The prm-weights Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include "prmw/gf.hpp"

using namespace prmw;

TEST(Field, PrimeField) {
    auto F = make_field(3, 1);
    EXPECT_EQ(F.q(), 3u);
    EXPECT_EQ(F.add(2, 2), 1);
    EXPECT_EQ(F.mul(2, 2), 1);
    EXPECT_EQ(F.elements(), (std::vector<Elem>{0, 1, 2}));
}

TEST(Field, FourElements) {
    auto F = make_field(2, 2, std::vector<unsigned>{1, 1, 1});
    EXPECT_EQ(F.q(), 4u);
    EXPECT_EQ(F.add(2, 3), 1);  // x + (x+1)
    EXPECT_EQ(F.mul(2, 2), 3);  // x^2 = x+1
    EXPECT_EQ(F.inv(2), 3);
    EXPECT_EQ(F.elements().size(), 4u);
}

TEST(Field, InverseExamples) {
    EXPECT_EQ(make_field(5, 1).inv(2), 3);
    EXPECT_EQ(make_field(5, 1).inv(1), 1);
    EXPECT_THROW(make_field(5, 1).inv(0), std::domain_error);
}

TEST(Field, Errors) {
    EXPECT_THROW(make_field(4, 1), std::invalid_argument);
    EXPECT_THROW(make_field(2, 2, std::vector<unsigned>{1, 0, 1}), std::invalid_argument);  // x^2+1 has root 1
    EXPECT_THROW(make_field(2, 2, std::vector<unsigned>{1, 1, 2}), std::invalid_argument);  // coefficient out of range
    EXPECT_THROW(make_field(3, 2, std::vector<unsigned>{1, 0, 2}), std::invalid_argument);  // not monic
    EXPECT_THROW(make_field(3, 2, std::vector<unsigned>{1, 1}), std::invalid_argument);     // wrong degree
    EXPECT_THROW(make_field(7, 2), std::invalid_argument);                                  // q = 49 too large
    EXPECT_THROW(make_field(2, 5), std::invalid_argument);                                  // q = 32 too large
    // x^4 + x^2 + 1 = (x^2+x+1)^2 over F_2: no root, still reducible
    try {
        make_field(2, 4, std::vector<unsigned>{1, 0, 1, 0, 1});
        FAIL() << "reducible modulus accepted";
    } catch (const std::invalid_argument& e) {
        EXPECT_NE(std::string(e.what()).find("reducible"), std::string::npos);
    }
}

TEST(Field, ParseSpec) {
    EXPECT_EQ(parse_field("4:1,1,1").q(), 4u);
    EXPECT_EQ(parse_field("2^3").modulus(), (std::vector<unsigned>{1, 1, 0, 1}));
    // highest degree first: x^3 + x^2 + 1
    EXPECT_EQ(parse_field("8:1,1,0,1").modulus(), (std::vector<unsigned>{1, 0, 1, 1}));
    EXPECT_EQ(parse_field("5").q(), 5u);
    EXPECT_EQ(parse_field("9").describe(), "9:1,0,1");
    EXPECT_THROW(parse_field("6"), std::invalid_argument);
    EXPECT_THROW(parse_field("4:1,0,1"), std::invalid_argument);
    EXPECT_THROW(parse_field("abc"), std::invalid_argument);
}

class AllFields : public ::testing::TestWithParam<unsigned> {};

TEST_P(AllFields, Axioms) {
    const auto F = field_of_order(GetParam());
    const unsigned q = F.q();
    for (unsigned a = 0; a < q; ++a) {
        const auto x = static_cast<Elem>(a);
        EXPECT_EQ(F.add(x, 0), x);
        EXPECT_EQ(F.mul(x, 1), x);
        EXPECT_EQ(F.add(x, F.neg(x)), 0);
        EXPECT_EQ(F.pow(x, q), x);
        if (a) {
            EXPECT_EQ(F.mul(x, F.inv(x)), 1);
            EXPECT_EQ(F.inv(F.inv(x)), x);
            EXPECT_EQ(F.pow(x, q - 1), 1);
        }
        for (unsigned b = 0; b < q; ++b) {
            const auto y = static_cast<Elem>(b);
            EXPECT_EQ(F.add(x, y), F.add(y, x));
            EXPECT_EQ(F.mul(x, y), F.mul(y, x));
            if (a && b) EXPECT_NE(F.mul(x, y), 0);
            for (unsigned c = 0; c < q; ++c) {
                const auto z = static_cast<Elem>(c);
                EXPECT_EQ(F.add(F.add(x, y), z), F.add(x, F.add(y, z)));
                EXPECT_EQ(F.mul(F.mul(x, y), z), F.mul(x, F.mul(y, z)));
                EXPECT_EQ(F.mul(x, F.add(y, z)), F.add(F.mul(x, y), F.mul(x, z)));
            }
        }
    }
}

INSTANTIATE_TEST_SUITE_P(Orders, AllFields, ::testing::Values(2u, 3u, 4u, 5u, 7u, 8u, 9u, 11u, 13u, 16u, 25u, 27u));
