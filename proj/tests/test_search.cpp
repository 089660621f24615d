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

#include <random>

#include "oracle.hpp"
#include "prmw/search.hpp"

using namespace prmw;

namespace {

CodeSpec prm(unsigned q, unsigned n, unsigned d) { return make_code(Family::PRM, field_of_order(q), n, d); }

}  // namespace

TEST(Search, ParseStrategies) {
    EXPECT_EQ(parse_strategies("embed"), std::vector<Strategy>{Strategy::embed});
    EXPECT_EQ(parse_strategies("linear,mincomb,linear"), (std::vector<Strategy>{Strategy::linear, Strategy::mincomb}));
    EXPECT_THROW(parse_strategies("linear,bogus"), std::invalid_argument);
    EXPECT_THROW(parse_strategies(""), std::invalid_argument);
}

TEST(Search, SubstituteCommutesWithEvaluation) {
    const auto F = field_of_order(4);
    const auto f = parse_polynomial(F, "X0*X2 + 3*X1^2 + X2^2", 3);
    std::mt19937_64 rng(5);
    std::vector<Polynomial> forms;
    std::vector<Coords> mat;
    for (int i = 0; i < 3; ++i) {
        Coords c(3);
        for (auto& e : c) e = static_cast<Elem>(rng() % 4);
        mat.push_back(c);
        forms.push_back(linear_form(F, c));
    }
    const auto g = detail::substitute(F, f, forms);
    for (const auto& p : oracle::affine_points(4, 3)) {
        std::vector<Elem> image(3, 0);
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) image[i] = F.add(image[i], F.mul(mat[i][j], p[j]));
        EXPECT_EQ(oracle::eval(F, g, p), oracle::eval(F, f, image));
    }
}

TEST(Search, EmbedFindsPlaneConicValue) {
    const auto r = randomized_low_weight_search(prm(3, 2, 2), {.strategies = {Strategy::embed}, .samples = 50, .seed = 7});
    ASSERT_TRUE(r.best);
    EXPECT_EQ(*r.best, 9u);
    EXPECT_EQ(r.w1, 6u);
}

TEST(Search, ResultsAreSoundUpperBounds) {
    for (auto cs : {prm(3, 2, 2), prm(3, 2, 3), prm(3, 2, 4), prm(4, 2, 2), prm(2, 3, 2), prm(3, 3, 2)}) {
        const auto r = randomized_low_weight_search(cs, {.samples = 300, .seed = 11});
        const auto oracle = exhaustive_low_weights(cs);
        ASSERT_TRUE(r.best && r.witness);
        EXPECT_EQ(encode(cs, *r.witness).weight(), *r.best);
        EXPECT_EQ(r.w1, *oracle.w1);
        EXPECT_GE(*r.best, *oracle.w2);
        EXPECT_LE(*r.best, w2_rm(cs.field.q(), cs.n, static_cast<int>(cs.d) - 1));
    }
}

TEST(Search, AffineCodes) {
    const auto cs = make_code(Family::RM, field_of_order(3), 2, 1);
    const auto r = randomized_low_weight_search(cs, {.samples = 100, .seed = 3});
    ASSERT_TRUE(r.best);
    EXPECT_EQ(*r.best, 9u);
    EXPECT_EQ(r.w1, 6u);
    EXPECT_EQ(r.witness->nvars(), 2u);
}

TEST(Search, UnknownCellsStayInsideBounds) {
    for (auto [n, d] : {std::pair{3u, 5u}, std::pair{2u, 4u}}) {
        const auto cs = prm(4, n, d);
        const auto pred = w2_prm(4, n, d);
        ASSERT_EQ(pred.status, Status::unknown);
        const auto r = randomized_low_weight_search(cs, {.samples = 200, .seed = 1});
        ASSERT_TRUE(r.best);
        EXPECT_GE(*r.best, pred.bounds->first);
        EXPECT_LE(*r.best, pred.bounds->second);
    }
}

TEST(Search, SameSeedSameReport) {
    const auto cs = prm(4, 2, 3);
    const auto a = randomized_low_weight_search(cs, {.samples = 120, .seed = 99});
    const auto b = randomized_low_weight_search(cs, {.samples = 120, .seed = 99});
    EXPECT_EQ(a.best, b.best);
    EXPECT_EQ(a.witness, b.witness);
    EXPECT_EQ(a.strategy, b.strategy);
}
