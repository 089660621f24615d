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

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "codes.hpp"
#include "witnesses.hpp"

// Randomized probe for low weights above the minimum distance. Candidates
// are built as degree-d forms in X0..Xn; for affine codes they are
// dehomogenized first. The result is an upper bound on W2, never a proof.

namespace prmw {

enum class Strategy { linear, quadric, embed, mincomb };

inline const char* to_string(Strategy s) {
    switch (s) {
        case Strategy::linear: return "linear";
        case Strategy::quadric: return "quadric";
        case Strategy::embed: return "embed";
        case Strategy::mincomb: return "mincomb";
    }
    return "?";
}

inline std::vector<Strategy> all_strategies() {
    return {Strategy::linear, Strategy::quadric, Strategy::embed, Strategy::mincomb};
}

/// Comma-separated list, e.g. "linear,embed".
inline std::vector<Strategy> parse_strategies(const std::string& text) {
    std::vector<Strategy> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        bool ok = false;
        for (auto s : all_strategies())
            if (item == to_string(s)) {
                if (std::find(out.begin(), out.end(), s) == out.end()) out.push_back(s);
                ok = true;
            }
        if (!ok) throw std::invalid_argument("unknown search strategy '" + item + "'");
    }
    if (out.empty()) throw std::invalid_argument("no search strategy given");
    return out;
}

struct SearchOptions {
    std::vector<Strategy> strategies = all_strategies();
    std::uint64_t samples = 2000;
    std::uint64_t seed = 1;
};

struct SearchResult {
    std::uint64_t w1 = 0;  // formula value the search must beat
    std::optional<std::uint64_t> best;
    std::optional<Polynomial> witness;
    std::string strategy;
    std::uint64_t samples = 0;
};

namespace detail {

/// f(L_0, ..., L_n) for linear forms L_i in the same variables.
inline Polynomial substitute(const Field& F, const Polynomial& f, const std::vector<Polynomial>& forms) {
    const unsigned nv = f.nvars();
    std::vector<std::vector<Polynomial>> powers(nv);
    Polynomial out(nv);
    for (const auto& [m, c] : f.terms()) {
        auto t = Polynomial::constant(nv, c);
        for (unsigned i = 0; i < nv; ++i) {
            auto& pw = powers[i];
            if (pw.empty()) pw.push_back(Polynomial::constant(nv, 1));
            while (pw.size() <= m[i]) pw.push_back(multiply(F, pw.back(), forms[i]));
            if (m[i]) t = multiply(F, t, pw[m[i]]);
        }
        out = add(F, out, t);
    }
    return out;
}

class Sampler {
public:
    Sampler(const Field& F, std::uint64_t seed) : F_(F), rng_(seed) {}

    Elem element() { return static_cast<Elem>(rng_() % F_.q()); }
    Elem nonzero() { return static_cast<Elem>(1 + rng_() % (F_.q() - 1)); }
    std::uint64_t below(std::uint64_t m) { return rng_() % m; }

    Polynomial linear(unsigned nv) {
        Coords c(nv);
        do {
            for (auto& e : c) e = element();
        } while (std::all_of(c.begin(), c.end(), [](Elem e) { return e == 0; }));
        return linear_form(F_, c);
    }

    // homogeneous linear form plus a constant, in nv variables
    Polynomial affine_linear(unsigned nv) {
        auto p = linear(nv);
        p.add_term(F_, Monomial(nv, 0), element());
        return p;
    }

    Polynomial quadratic_form(unsigned nv) {
        Polynomial p(nv);
        for (unsigned i = 0; i < nv; ++i)
            for (unsigned j = i; j < nv; ++j) {
                Monomial m(nv, 0);
                ++m[i];
                ++m[j];
                p.add_term(F_, m, element());
            }
        return p;
    }

private:
    const Field& F_;
    std::mt19937_64 rng_;
};

}  // namespace detail

inline SearchResult randomized_low_weight_search(const CodeSpec& cs, const SearchOptions& opt = {}) {
    const Field& F = cs.field;
    const unsigned q = F.q(), n = cs.n, d = cs.d, nv = n + 1;
    const bool projective = cs.family == Family::PRM;
    if (projective) decompose_projective(q, n, static_cast<int>(d));
    if (opt.strategies.empty()) throw std::invalid_argument("no search strategy given");
    // affine codes above n(q-1) contain every function; search at the clamped order
    const unsigned da = projective ? d - 1 : std::min(d, n * (q - 1));

    SearchResult r;
    r.w1 = projective ? w1_prm(q, n, static_cast<int>(d)) : w1_rm(q, n, static_cast<int>(d));

    auto consider = [&](const Polynomial& form, Strategy s) {
        const Polynomial p = projective ? form : dehomogenize(F, form);
        const auto w = encode(cs, p).weight();
        if (w > r.w1 && (!r.best || w < *r.best)) {
            r.best = w;
            r.witness = p;
            r.strategy = to_string(s);
        }
    };
    auto to_form = [&](const Polynomial& affine) { return projective ? embed_affine(affine, d) : homogenize(affine, d); };

    const Polynomial min_form = to_form(min_weight_affine(F, n, static_cast<int>(da)).poly);
    detail::Sampler rnd(F, opt.seed);
    bool constructive_done = false;

    for (std::uint64_t i = 0; i < opt.samples; ++i) {
        const Strategy s = opt.strategies[i % opt.strategies.size()];
        Polynomial f(nv);
        switch (s) {
            case Strategy::linear: {
                f = Polynomial::constant(nv, 1);
                for (unsigned t = 0; t < d; ++t) f = multiply(F, f, rnd.linear(nv));
                break;
            }
            case Strategy::quadric: {
                if (d < 2) {
                    f = rnd.linear(nv);
                    break;
                }
                f = rnd.quadratic_form(nv);
                for (unsigned t = 2; t < d; ++t) f = multiply(F, f, rnd.linear(nv));
                break;
            }
            case Strategy::embed: {
                if (!constructive_done) {
                    constructive_done = true;
                    f = to_form(second_weight_affine_candidate(F, n, static_cast<int>(da)).poly);
                    break;
                }
                auto g = Polynomial::constant(n, rnd.nonzero());
                for (unsigned t = 0; t < da; ++t) g = multiply(F, g, rnd.affine_linear(n));
                f = to_form(g);
                break;
            }
            case Strategy::mincomb: {
                const auto terms = 2 + rnd.below(2);
                for (std::uint64_t t = 0; t < terms; ++t) {
                    std::vector<Polynomial> forms;
                    for (unsigned v = 0; v < nv; ++v) forms.push_back(rnd.linear(nv));
                    f = add(F, f, scale(F, rnd.nonzero(), detail::substitute(F, min_form, forms)));
                }
                break;
            }
        }
        ++r.samples;
        if (!f.is_zero()) consider(f, s);
    }
    return r;
}

}  // namespace prmw
