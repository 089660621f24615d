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
#include <set>

#include "oracle.hpp"
#include "prmw/codes.hpp"

using namespace prmw;

namespace {

CodeSpec rm(unsigned q, unsigned n, unsigned d) { return make_code(Family::RM, field_of_order(q), n, d); }
CodeSpec prm(unsigned q, unsigned n, unsigned d) { return make_code(Family::PRM, field_of_order(q), n, d); }

std::vector<std::uint64_t> oracle_spectrum(const CodeSpec& cs) {
    const auto dist = oracle::code_distribution(cs.field, cs.family == Family::PRM, cs.n, cs.d);
    std::vector<std::uint64_t> s(cs.length() + 1, 0);
    for (auto [w, c] : dist)
        if (w) s[w] = c;
    return s;
}

}  // namespace

TEST(Codes, MonomialBasis) {
    const auto b = monomial_basis(rm(3, 2, 1));
    EXPECT_EQ(b, (std::vector<Monomial>{{0, 0}, {0, 1}, {1, 0}}));
    EXPECT_EQ(monomial_basis(prm(3, 2, 2)).size(), 6u);
    EXPECT_EQ(monomial_basis(rm(2, 2, 2)), (std::vector<Monomial>{{0, 0}, {0, 1}, {1, 0}, {1, 1}}));
    for (const auto& m : monomial_basis(prm(4, 3, 5))) EXPECT_EQ(degree_of(m), 5u);
}

TEST(Codes, Encode) {
    const auto c = rm(3, 2, 1);
    EXPECT_EQ(encode(c, Polynomial::variable(2, 0)).weight(), 6u);
    EXPECT_EQ(encode(c, Polynomial(2)).weight(), 0u);
    EXPECT_EQ(encode(c, Polynomial(2)).values.size(), 9u);
    const auto p = prm(3, 3, 2);
    EXPECT_EQ(encode(p, parse_polynomial(p.field, "X1*X3 + X0*X2", 4)).weight(), 24u);
    EXPECT_THROW(encode(p, parse_polynomial(p.field, "X1 + X0*X2", 4)), std::invalid_argument);
    EXPECT_THROW(encode(p, parse_polynomial(p.field, "X1*X2", 3)), std::invalid_argument);
    // RM input is reduced first: X1^3 = X1 over F_3
    EXPECT_EQ(encode(c, parse_polynomial(c.field, "X0^3", 2)).values, encode(c, Polynomial::variable(2, 0)).values);
    EXPECT_THROW(encode(c, parse_polynomial(c.field, "X0*X1", 2)), std::invalid_argument);
}

TEST(Codes, Linearity) {
    std::mt19937_64 rng(17);
    for (auto cs : {prm(3, 2, 3), prm(4, 2, 2), rm(5, 2, 3)}) {
        const auto basis = monomial_basis(cs);
        const Field& F = cs.field;
        for (int t = 0; t < 20; ++t) {
            Polynomial a(cs.nvars()), b(cs.nvars());
            for (const auto& m : basis) {
                a.add_term(F, m, static_cast<Elem>(rng() % F.q()));
                b.add_term(F, m, static_cast<Elem>(rng() % F.q()));
            }
            const auto lam = static_cast<Elem>(1 + rng() % (F.q() - 1));
            const auto ca = encode(cs, a).values, cb = encode(cs, b).values, cab = encode(cs, add(F, a, b)).values;
            const auto cl = encode(cs, scale(F, lam, a)).values;
            for (std::size_t i = 0; i < ca.size(); ++i) {
                EXPECT_EQ(cab[i], F.add(ca[i], cb[i]));
                EXPECT_EQ(cl[i], F.mul(lam, ca[i]));
            }
            EXPECT_EQ(encode(cs, scale(F, lam, a)).weight(), encode(cs, a).weight());
        }
    }
}

TEST(Codes, Dimension) {
    EXPECT_EQ(dimension(prm(3, 2, 2)), 6u);
    EXPECT_EQ(dimension(rm(3, 2, 1)), 3u);
    EXPECT_EQ(dimension(prm(3, 2, 4)), 12u);
    // code size by closure, with no elimination involved
    for (auto cs : {prm(3, 2, 2), prm(3, 2, 4), prm(2, 3, 3), rm(3, 2, 3), prm(4, 2, 3)}) {
        const auto code = oracle::span(cs.field, oracle::monomial_rows(cs.field, cs.family == Family::PRM, cs.n, cs.d));
        EXPECT_EQ(code.size(), ipow(cs.field.q(), static_cast<unsigned>(dimension(cs))));
    }
}

TEST(Codes, GeneratorMessagesArePolynomials) {
    const auto G = generator_matrix(prm(3, 2, 4));
    ASSERT_EQ(G.dim(), 12u);
    std::mt19937_64 rng(2);
    for (int t = 0; t < 20; ++t) {
        std::vector<Elem> msg(G.dim());
        for (auto& m : msg) m = static_cast<Elem>(rng() % 3);
        const auto cw = encode(G.code, G.polynomial(msg)).values;
        std::vector<Elem> direct(G.length(), 0);
        for (std::size_t j = 0; j < msg.size(); ++j)
            for (std::size_t i = 0; i < direct.size(); ++i)
                direct[i] = G.code.field.add(direct[i], G.code.field.mul(msg[j], G.rows[j][i]));
        EXPECT_EQ(cw, direct);
    }
}

TEST(Gray, SingleDigitSteps) {
    for (unsigned q : {2u, 3u, 4u, 5u})
        for (unsigned L : {1u, 2u, 3u, 4u}) {
            const std::uint64_t total = ipow(q, L);
            detail::GrayCounter g(q, L, 0);
            std::set<std::vector<unsigned>> seen{g.digits()};
            for (std::uint64_t x = 1; x < total; ++x) {
                auto prev = g.digits();
                auto [i, old] = g.step();
                EXPECT_EQ(prev[i], old);
                unsigned changed = 0;
                for (unsigned j = 0; j < L; ++j) changed += prev[j] != g.digits()[j];
                EXPECT_EQ(changed, 1u);
                EXPECT_EQ(std::abs(static_cast<int>(g.digits()[i]) - static_cast<int>(old)), 1);
                // resuming from an arbitrary index gives the same word
                EXPECT_EQ(detail::GrayCounter(q, L, x).digits(), g.digits());
                seen.insert(g.digits());
            }
            EXPECT_EQ(seen.size(), total);
        }
}

TEST(Oracle, ExamplesFromTheLiterature) {
    auto r = exhaustive_low_weights(prm(3, 2, 2), {.spectrum = true});
    EXPECT_EQ(r.w1, 6u);
    EXPECT_EQ(r.w2, 9u);
    EXPECT_EQ(r.spectrum[7], 0u);
    EXPECT_EQ(r.spectrum[8], 0u);

    r = exhaustive_low_weights(rm(3, 2, 1));
    EXPECT_EQ(r.w1, 6u);
    EXPECT_EQ(r.w2, 9u);

    r = exhaustive_low_weights(prm(3, 3, 2));
    EXPECT_EQ(r.w1, 18u);
    EXPECT_EQ(r.w2, 24u);
    EXPECT_EQ(r.dimension, 10u);
    EXPECT_EQ(r.enumerated, (ipow(3, 10) - 1) / 2);
}

TEST(Oracle, SpectrumMatchesClosure) {
    for (auto cs : {prm(3, 2, 2), prm(3, 2, 3), prm(3, 2, 4), prm(3, 1, 2), prm(4, 2, 2), prm(2, 3, 2), prm(2, 2, 3),
                    rm(3, 2, 2), rm(2, 3, 2), rm(4, 2, 1), prm(5, 1, 3)}) {
        const auto want = oracle_spectrum(cs);
        const auto got = exhaustive_low_weights(cs, {.spectrum = true});
        EXPECT_EQ(got.spectrum, want) << to_string(cs.family) << " q=" << cs.field.q() << " n=" << cs.n << " d=" << cs.d;
        const auto [w1, w2] = oracle::low_weights(oracle::code_distribution(cs.field, cs.family == Family::PRM, cs.n, cs.d));
        EXPECT_EQ(got.w1, w1);
        EXPECT_EQ(got.w2, w2);
        ASSERT_TRUE(got.w1_witness && got.w2_witness);
        EXPECT_EQ(encode(cs, *got.w1_witness).weight(), *got.w1);
        EXPECT_EQ(encode(cs, *got.w2_witness).weight(), *got.w2);
        // scalar multiples come in classes of q-1
        EXPECT_EQ(got.spectrum[*got.w1] % (cs.field.q() - 1), 0u);
    }
}

TEST(Oracle, ScalarSkippingMatchesFullEnumeration) {
    for (auto cs : {prm(3, 2, 3), prm(4, 2, 2), rm(5, 2, 2)}) {
        const auto skip = exhaustive_low_weights(cs, {.spectrum = true});
        const auto full = exhaustive_low_weights(cs, {.spectrum = true, .skip_scalar_multiples = false});
        EXPECT_EQ(skip.spectrum, full.spectrum);
        EXPECT_EQ(skip.w1, full.w1);
        EXPECT_EQ(skip.w2, full.w2);
        EXPECT_EQ(full.enumerated, ipow(cs.field.q(), static_cast<unsigned>(full.dimension)) - 1);
        EXPECT_EQ(skip.enumerated * (cs.field.q() - 1), full.enumerated);
    }
}

TEST(Oracle, ThreadCountDoesNotChangeResults) {
    for (auto cs : {prm(3, 2, 4), prm(2, 3, 3), prm(4, 2, 2)}) {
        const auto one = exhaustive_low_weights(cs, {.threads = 1, .spectrum = true});
        for (unsigned t : {2u, 3u, 7u}) {
            const auto many = exhaustive_low_weights(cs, {.threads = t, .spectrum = true});
            EXPECT_EQ(many.w1, one.w1);
            EXPECT_EQ(many.w2, one.w2);
            EXPECT_EQ(many.w1_witness, one.w1_witness);
            EXPECT_EQ(many.w2_witness, one.w2_witness);
            EXPECT_EQ(many.spectrum, one.spectrum);
        }
    }
}

TEST(Oracle, MinimumDistanceRelation) {
    // W1 of PRM(n, d) equals W1 of RM(n, d-1)
    for (unsigned q : {2u, 3u, 4u})
        for (unsigned n : {1u, 2u})
            for (unsigned d = 2; d <= n * (q - 1) + 1; ++d) {
                if (ipow(q, static_cast<unsigned>(dimension(prm(q, n, d)))) > (1u << 20)) continue;
                const auto p = exhaustive_low_weights(prm(q, n, d));
                const auto a = exhaustive_low_weights(rm(q, n, d - 1));
                EXPECT_EQ(p.w1, a.w1) << q << " " << n << " " << d;
            }
}

TEST(Oracle, Budget) {
    EXPECT_THROW(exhaustive_low_weights(prm(3, 2, 4), {.budget = 1000}), BudgetExceeded);
    EXPECT_NO_THROW(exhaustive_low_weights(prm(3, 2, 4), {.budget = ipow(3, 12)}));
}

TEST(Oracle, VisitorCoversClasses) {
    const auto G = generator_matrix(prm(3, 2, 2));
    std::uint64_t count = 0;
    for_each_codeword(G, true, [&](std::span<const Elem> v, std::size_t w, std::uint64_t idx) {
        EXPECT_EQ(idx, count++);
        const auto msg = message_at(G, true, idx);
        const auto cw = encode(G.code, G.polynomial(msg));
        EXPECT_EQ(cw.weight(), w);
        EXPECT_TRUE(std::equal(v.begin(), v.end(), cw.values.begin()));
        EXPECT_EQ(*std::find_if(msg.begin(), msg.end(), [](Elem e) { return e != 0; }), 1);
    });
    EXPECT_EQ(count, (ipow(3, 6) - 1) / 2);
}
