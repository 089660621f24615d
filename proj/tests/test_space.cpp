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

#include "oracle.hpp"
#include "prmw/poly.hpp"
#include "prmw/space.hpp"

using namespace prmw;

namespace {

PointSet support_of(const Geometry& G, const Polynomial& f) {
    PointSet s(G.space().size());
    for (std::size_t i = 0; i < G.space().size(); ++i) {
        auto p = G.space().point(i);
        if (oracle::eval(G.field(), f, {p.begin(), p.end()})) s.insert(i);
    }
    return s;
}

std::uint64_t gaussian_binomial(unsigned q, unsigned n, unsigned k) {
    std::uint64_t num = 1, den = 1;
    for (unsigned i = 0; i < k; ++i) {
        num *= ipow(q, n - i) - 1;
        den *= ipow(q, i + 1) - 1;
    }
    return num / den;
}

}  // namespace

TEST(Affine, Enumeration) {
    auto pts = enumerate_affine(make_field(2, 1), 2);
    ASSERT_EQ(pts.size(), 4u);
    EXPECT_EQ(pts[0].coords, (Coords{0, 0}));
    EXPECT_EQ(pts[1].coords, (Coords{0, 1}));
    EXPECT_EQ(pts[2].coords, (Coords{1, 0}));
    EXPECT_EQ(pts[3].coords, (Coords{1, 1}));
    EXPECT_EQ(enumerate_affine(make_field(3, 1), 3).size(), 27u);
    EXPECT_EQ(enumerate_affine(field_of_order(4), 2).front().coords, (Coords{0, 0}));
}

TEST(Projective, CountsAndOrder) {
    EXPECT_EQ(enumerate_projective(make_field(3, 1), 2).size(), 13u);
    EXPECT_EQ(enumerate_projective(make_field(2, 1), 3).size(), 15u);
    for (unsigned q : {2u, 3u, 4u, 5u, 7u})
        for (unsigned n = 1; n <= 4; ++n) {
            const auto F = field_of_order(q);
            const auto pts = enumerate_projective(F, n);
            ASSERT_EQ(pts.size(), (ipow(q, n + 1) - 1) / (q - 1));
            EXPECT_EQ(pts.front().coords[0], 1);
            for (unsigned i = 1; i <= n; ++i) EXPECT_EQ(pts.front().coords[i], 0);
            const auto ref = oracle::projective_points(q, n);
            for (std::size_t i = 0; i < pts.size(); ++i) EXPECT_EQ(pts[i].coords, ref[i]);
        }
}

TEST(Projective, AffineChartIsPrefix) {
    const auto F = make_field(3, 1);
    ProjectiveSpace P(F, 2);
    const auto aff = enumerate_affine(F, 2);
    ASSERT_EQ(P.affine_chart_size(), aff.size());
    for (std::size_t i = 0; i < aff.size(); ++i) {
        auto p = P.point(i);
        EXPECT_EQ(p[0], 1);
        EXPECT_EQ(Coords(p.begin() + 1, p.end()), aff[i].coords);
    }
}

TEST(Normalize, Examples) {
    const auto F3 = make_field(3, 1);
    EXPECT_EQ(normalize(F3, Coords{0, 2, 1}).coords, (Coords{0, 1, 2}));
    EXPECT_EQ(normalize(F3, Coords{1, 2, 1}).coords, (Coords{1, 2, 1}));
    EXPECT_EQ(normalize(field_of_order(4), Coords{2, 2, 0}).coords, (Coords{1, 1, 0}));
    EXPECT_THROW(normalize(F3, Coords{0, 0, 0}), std::invalid_argument);
}

TEST(Normalize, EveryVectorLandsOnExactlyOnePoint) {
    for (unsigned q : {3u, 4u, 5u}) {
        const auto F = field_of_order(q);
        ProjectiveSpace P(F, 2);
        std::vector<unsigned> hits(P.size(), 0);
        for (const auto& v : oracle::affine_points(q, 3)) {
            if (v == Coords{0, 0, 0}) continue;
            auto p = normalize(F, v);
            EXPECT_EQ(normalize(F, p.coords), p);
            const auto idx = P.index_of(p.coords);
            ASSERT_LT(idx, P.size());
            auto stored = P.point(idx);
            EXPECT_EQ(Coords(stored.begin(), stored.end()), p.coords);
            ++hits[idx];
        }
        for (auto h : hits) EXPECT_EQ(h, q - 1);
    }
}

TEST(Hyperplanes, Incidence) {
    for (unsigned q : {2u, 3u, 4u})
        for (unsigned n : {2u, 3u}) {
            Geometry G(field_of_order(q), n);
            const auto N = G.space().size();
            ASSERT_EQ(G.hyperplanes().size(), N);
            const std::size_t per = (ipow(q, n) - 1) / (q - 1);
            std::vector<std::size_t> through(N, 0);
            for (std::size_t h = 0; h < N; ++h) {
                EXPECT_EQ(G.hyperplane_points(h).size(), per);
                for (auto i : G.hyperplane_points(h).indices()) ++through[i];
            }
            for (auto c : through) EXPECT_EQ(c, per);
        }
    EXPECT_EQ(enumerate_hyperplanes(make_field(3, 1), 2).size(), 13u);
    EXPECT_EQ(enumerate_hyperplanes(make_field(2, 1), 3).size(), 15u);
}

TEST(AvoidingHyperplane, Examples) {
    const auto F = make_field(3, 1);
    Geometry G(F, 2);
    PointSet one(G.space().size());
    one.insert(G.space().index_of(Coords{1, 0, 0}));
    auto h = find_avoiding_hyperplane(G, one);
    ASSERT_TRUE(h);
    EXPECT_EQ(h->coeffs, (Coords{1, 0, 0}));  // X0 = 0
    EXPECT_FALSE(find_avoiding_hyperplane(G, PointSet::full(G.space().size())));
}

TEST(AvoidingHyperplane, QuadricSupportMeetsEveryPlane) {
    const auto F = make_field(3, 1);
    Geometry G(F, 3);
    const auto f = parse_polynomial(F, "X1*X3 + X0*X2", 4);
    const auto S = support_of(G, f);
    ASSERT_EQ(S.size(), 24u);
    // brute force over the 40 planes, independent of the cached incidence sets
    bool any = false;
    for (const auto& h : enumerate_hyperplanes(F, 3)) {
        bool meets = false;
        for (auto i : S.indices()) meets |= h.contains(F, G.space().point(i));
        any |= !meets;
    }
    EXPECT_FALSE(any);
    EXPECT_FALSE(find_avoiding_hyperplane(G, S));
}

TEST(Subspaces, CountsMatchGaussianBinomials) {
    for (unsigned q : {2u, 3u, 4u})
        for (unsigned n = 1; n <= 3; ++n)
            for (unsigned r = 0; r <= n; ++r) {
                std::uint64_t count = 0;
                std::set<std::vector<std::size_t>> seen;
                ProjectiveSpace P(field_of_order(q), n);
                for_each_subspace(field_of_order(q), n, r, [&](const LinearSubspace& s) {
                    ++count;
                    auto pts = subspace_points(P, s);
                    EXPECT_EQ(pts.size(), (ipow(q, r + 1) - 1) / (q - 1));
                    seen.insert(pts.indices());
                    return true;
                });
                EXPECT_EQ(count, gaussian_binomial(q, n + 1, r + 1)) << q << " " << n << " " << r;
                EXPECT_EQ(seen.size(), count);
            }
}

TEST(AvoidingSubspace, Examples) {
    const auto F = make_field(3, 1);
    Geometry G(F, 3);
    auto first = find_avoiding_subspace(G, PointSet(G.space().size()), 1);
    ASSERT_TRUE(first);
    EXPECT_EQ(first->basis, (std::vector<Coords>{{1, 0, 0, 0}, {0, 1, 0, 0}}));

    const auto S = support_of(G, parse_polynomial(F, "X1*X3 + X0*X2", 4));
    auto pt = find_avoiding_subspace(G, S, 0);
    ASSERT_TRUE(pt);
    EXPECT_FALSE(S.contains(G.space().index_of(pt->basis[0])));
    // lines on the quadric's complement do exist, planes do not
    EXPECT_EQ(largest_avoiding_subspace_dim(G, S), std::optional<unsigned>(1));
    EXPECT_THROW(find_avoiding_subspace(G, S, 3), std::invalid_argument);
}

TEST(HyperplaneUnion, Examples) {
    const auto F = make_field(3, 1);
    Geometry G2(F, 2);
    const auto z = support_of(G2, parse_polynomial(F, "X0*X1", 3)).complement();
    auto u = is_hyperplane_union(G2, z, 2);
    ASSERT_TRUE(u);
    EXPECT_EQ(u->size(), 2u);
    EXPECT_EQ((*u)[0].coeffs, (Coords{1, 0, 0}));
    EXPECT_EQ((*u)[1].coeffs, (Coords{0, 1, 0}));

    const auto line = G2.hyperplane_points(5);
    auto single = is_hyperplane_union(G2, line, 1);
    ASSERT_TRUE(single);
    EXPECT_EQ(single->front(), G2.hyperplanes()[5]);

    Geometry G3(F, 3);
    const auto zq = support_of(G3, parse_polynomial(F, "X1*X3 + X0*X2", 4)).complement();
    ASSERT_EQ(zq.size(), 16u);
    EXPECT_FALSE(is_hyperplane_union(G3, zq, 2));
    // any two distinct planes of P^3(F_3) cover 13 + 13 - 4 = 22 points
    EXPECT_EQ((G3.hyperplane_points(0).size() * 2) - 4, 22u);

    EXPECT_THROW(is_hyperplane_union(G3, PointSet::full(G3.space().size()), 3, 100), BudgetExceeded);
}
