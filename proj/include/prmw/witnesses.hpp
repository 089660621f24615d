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

#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include "codes.hpp"
#include "poly.hpp"
#include "weights.hpp"

// Explicit low-weight codewords. Every builder evaluates its polynomial and
// refuses to return a witness whose weight differs from the claim.

namespace prmw {

class WitnessMismatch : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

struct Witness {
    Polynomial poly{0};
    std::uint64_t claimed_weight = 0;
    std::string source;
    bool verified = false;
};

namespace witness_source {
inline constexpr const char* min_weight = "min-weight-product";
inline constexpr const char* second_affine = "second-weight-affine";
inline constexpr const char* quadric = "quadric-construction";
inline constexpr const char* embedded = "embedded";
}  // namespace witness_source

inline Witness verify_witness(Witness w, const CodeSpec& cs) {
    const auto got = encode(cs, w.poly).weight();
    if (got != w.claimed_weight)
        throw WitnessMismatch(w.source + " witness " + to_string(w.poly) + " has weight " + std::to_string(got) + ", claimed " +
                              std::to_string(w.claimed_weight));
    w.verified = true;
    return w;
}

namespace detail {

// X_i - c
inline Polynomial shifted_variable(const Field& F, unsigned nvars, unsigned i, Elem c) {
    auto p = Polynomial::variable(nvars, i);
    p.add_term(F, Monomial(nvars, 0), F.neg(c));
    return p;
}

// X_i^(q-1) - 1, the indicator of X_i = 0 up to sign
inline Polynomial zero_indicator(const Field& F, unsigned nvars, unsigned i) {
    Monomial m(nvars, 0);
    m[i] = F.q() - 1;
    auto p = Polynomial::monomial(m);
    p.add_term(F, Monomial(nvars, 0), F.neg(1));
    return p;
}

inline Polynomial zero_indicators(const Field& F, unsigned nvars, unsigned first, unsigned count) {
    auto p = Polynomial::constant(nvars, 1);
    for (unsigned j = first; j < first + count; ++j) p = multiply(F, p, zero_indicator(F, nvars, j));
    return p;
}

// prod_{t < count} (X_i - gamma_t), gamma_t the t-th field element
inline Polynomial root_product(const Field& F, unsigned nvars, unsigned i, unsigned count) {
    auto p = Polynomial::constant(nvars, 1);
    for (unsigned t = 0; t < count; ++t) p = multiply(F, p, shifted_variable(F, nvars, i, static_cast<Elem>(t)));
    return p;
}

inline void check_affine_order(unsigned q, unsigned n, int d) {
    if (d < 1 || static_cast<unsigned>(d) > n * (q - 1))
        throw std::invalid_argument("affine witness needs 1 <= d <= n(q-1)");
}

}  // namespace detail

/// prod_{j<a} (X_j^(q-1) - 1) * prod_{t<b} (X_a - gamma_t), weight (q-b) q^(n-a-1).
inline Witness min_weight_affine(const Field& F, unsigned n, int d) {
    const unsigned q = F.q();
    detail::check_affine_order(q, n, d);
    const auto [a, b, clamped] = decompose_affine(q, n, d);
    auto g = multiply(F, detail::zero_indicators(F, n, 0, a), detail::root_product(F, n, a, b));
    return verify_witness(Witness{std::move(g), w1_rm(q, n, d), witness_source::min_weight}, make_code(Family::RM, F, n, d));
}

/// A polynomial of degree <= d attaining w2_rm(q, n, d).
inline Witness second_weight_affine_candidate(const Field& F, unsigned n, int d) {
    const unsigned q = F.q();
    detail::check_affine_order(q, n, d);
    const auto [a, b, clamped] = decompose_affine(q, n, d);
    Polynomial g(n);
    if (a == n - 1) {
        // one root fewer on the last variable
        g = multiply(F, detail::zero_indicators(F, n, 0, a), detail::root_product(F, n, a, b - 1));
    } else if (b > 1) {
        g = multiply(F, detail::zero_indicators(F, n, 0, a), detail::root_product(F, n, a, b - 1));
        g = multiply(F, g, Polynomial::variable(n, a + 1));
    } else if (a == 0) {
        g = Polynomial::constant(n, 1);
    } else if (q >= 4 || (q == 2 && a == n - 2)) {
        g = detail::zero_indicators(F, n, 0, a);
    } else if (q == 3) {
        // X_{a-1} X_a X_{a+1} is nonzero on 8 of 27 points
        g = detail::zero_indicators(F, n, 0, a - 1);
        for (unsigned j = a - 1; j <= a + 1; ++j) g = multiply(F, g, Polynomial::variable(n, j));
    } else {
        // q = 2, a < n-2: X_{a-1} X_a + X_{a+1} X_{a+2} has weight 6 on F_2^4
        auto quad = add(F, multiply(F, Polynomial::variable(n, a - 1), Polynomial::variable(n, a)),
                        multiply(F, Polynomial::variable(n, a + 1), Polynomial::variable(n, a + 2)));
        g = multiply(F, detail::zero_indicators(F, n, 0, a - 1), quad);
    }
    return verify_witness(Witness{std::move(g), w2_rm(q, n, d), witness_source::second_affine}, make_code(Family::RM, F, n, d));
}

/// f = X1 X_{k+3} g + X0 X_{k+2} h with g = prod_{i=2}^{k+1} (X_i^(q-1) - X1^(q-1))
/// and h = prod_{i=2}^{k+1} (X_i^(q-1) - X0^(q-1)); degree k(q-1) + 2,
/// weight (q^2 - 1) q^(n-k-2).
inline Witness quadric_witness(const Field& F, unsigned n, unsigned k) {
    if (n < 3 || k + 2 >= n) throw std::invalid_argument("quadric witness needs n >= 3 and 0 <= k < n-2");
    const unsigned q = F.q();
    const unsigned nv = n + 1;
    auto power_var = [&](unsigned i) {
        Monomial m(nv, 0);
        m[i] = q - 1;
        return Polynomial::monomial(m);
    };
    auto g = Polynomial::constant(nv, 1), h = Polynomial::constant(nv, 1);
    for (unsigned i = 2; i <= k + 1; ++i) {
        g = multiply(F, g, subtract(F, power_var(i), power_var(1)));
        h = multiply(F, h, subtract(F, power_var(i), power_var(0)));
    }
    auto lhs = multiply(F, multiply(F, Polynomial::variable(nv, 1), Polynomial::variable(nv, k + 3)), g);
    auto rhs = multiply(F, multiply(F, Polynomial::variable(nv, 0), Polynomial::variable(nv, k + 2)), h);
    const std::uint64_t claim = (std::uint64_t{q} * q - 1) * ipow(q, n - k - 2);
    return verify_witness(Witness{add(F, lhs, rhs), claim, witness_source::quadric},
                          make_code(Family::PRM, F, n, k * (q - 1) + 2));
}

/// X0^(d - deg g) g^(h) for an affine witness g of degree <= d-1.
inline Witness prm_embedded_witness(const Field& F, unsigned n, unsigned d, const Witness& affine) {
    if (affine.poly.nvars() != n) throw std::invalid_argument("affine witness has wrong variable count");
    if (affine.poly.degree() >= static_cast<int>(d)) throw std::invalid_argument("embedding needs an affine witness of degree <= d-1");
    Witness w{embed_affine(affine.poly, d), affine.claimed_weight, std::string(witness_source::embedded) + ":" + affine.source};
    return verify_witness(std::move(w), make_code(Family::PRM, F, n, d));
}

/// Support split over the hyperplane X0 = 0 and the chart X0 = 1.
struct ChartCounts {
    std::uint64_t at_infinity = 0;
    std::uint64_t affine = 0;
};

inline ChartCounts chart_support_counts(const CodeSpec& cs, const Polynomial& f) {
    if (cs.family != Family::PRM) throw std::invalid_argument("chart counts apply to projective codes");
    const auto cw = encode(cs, f);
    const std::size_t chart = ipow(cs.field.q(), cs.n);  // points (1 : x) come first
    ChartCounts c;
    for (std::size_t i = 0; i < cw.values.size(); ++i)
        if (cw.values[i]) ++(i < chart ? c.affine : c.at_infinity);
    return c;
}

}  // namespace prmw
