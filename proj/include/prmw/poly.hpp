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

#include <cctype>
#include <map>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "gf.hpp"
#include "space.hpp"

namespace prmw {

/// Exponent vector, one entry per variable.
using Monomial = std::vector<unsigned>;

inline unsigned degree_of(const Monomial& m) { return std::accumulate(m.begin(), m.end(), 0u); }

/// Sparse polynomial over F_q: monomial -> nonzero coefficient.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(unsigned nvars) : nvars_(nvars) {}

    static Polynomial constant(unsigned nvars, Elem c) {
        Polynomial p(nvars);
        if (c) p.terms_[Monomial(nvars, 0)] = c;
        return p;
    }

    static Polynomial variable(unsigned nvars, unsigned i) {
        if (i >= nvars) throw std::invalid_argument("variable index out of range");
        Monomial m(nvars, 0);
        m[i] = 1;
        Polynomial p(nvars);
        p.terms_[m] = 1;
        return p;
    }

    /// Takes ownership of a term map; zero coefficients are dropped.
    static Polynomial from_terms(unsigned nvars, std::map<Monomial, Elem> terms) {
        Polynomial p(nvars);
        for (auto it = terms.begin(); it != terms.end();) {
            if (it->first.size() != nvars) throw std::invalid_argument("monomial has wrong variable count");
            it = it->second ? std::next(it) : terms.erase(it);
        }
        p.terms_ = std::move(terms);
        return p;
    }

    static Polynomial monomial(Monomial m, Elem c = 1) {
        Polynomial p(static_cast<unsigned>(m.size()));
        if (c) p.terms_[std::move(m)] = c;
        return p;
    }

    unsigned nvars() const { return nvars_; }
    const std::map<Monomial, Elem>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    /// Total degree; -1 for the zero polynomial.
    int degree() const {
        int d = -1;
        for (const auto& [m, c] : terms_) d = std::max(d, static_cast<int>(degree_of(m)));
        return d;
    }

    /// The zero polynomial is homogeneous of every degree.
    bool is_homogeneous(unsigned d) const {
        for (const auto& [m, c] : terms_)
            if (degree_of(m) != d) return false;
        return true;
    }

    void add_term(const Field& F, const Monomial& m, Elem c) {
        if (m.size() != nvars_) throw std::invalid_argument("monomial has wrong variable count");
        if (!c) return;
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            terms_.emplace(m, c);
            return;
        }
        it->second = F.add(it->second, c);
        if (!it->second) terms_.erase(it);
    }

    Elem coefficient(const Monomial& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? Elem{0} : it->second;
    }

    friend bool operator==(const Polynomial&, const Polynomial&) = default;

private:
    unsigned nvars_ = 0;
    std::map<Monomial, Elem> terms_;
};

inline Polynomial add(const Field& F, const Polynomial& a, const Polynomial& b) {
    if (a.nvars() != b.nvars()) throw std::invalid_argument("variable count mismatch");
    Polynomial r = a;
    for (const auto& [m, c] : b.terms()) r.add_term(F, m, c);
    return r;
}

inline Polynomial scale(const Field& F, Elem s, const Polynomial& a) {
    Polynomial r(a.nvars());
    for (const auto& [m, c] : a.terms()) r.add_term(F, m, F.mul(s, c));
    return r;
}

inline Polynomial subtract(const Field& F, const Polynomial& a, const Polynomial& b) {
    return add(F, a, scale(F, F.neg(1), b));
}

inline Polynomial multiply(const Field& F, const Polynomial& a, const Polynomial& b) {
    if (a.nvars() != b.nvars()) throw std::invalid_argument("variable count mismatch");
    Polynomial r(a.nvars());
    Monomial m(a.nvars());
    for (const auto& [ma, ca] : a.terms())
        for (const auto& [mb, cb] : b.terms()) {
            for (unsigned i = 0; i < a.nvars(); ++i) m[i] = ma[i] + mb[i];
            r.add_term(F, m, F.mul(ca, cb));
        }
    return r;
}

inline Polynomial power(const Field& F, const Polynomial& a, unsigned e) {
    Polynomial r = Polynomial::constant(a.nvars(), 1);
    for (unsigned i = 0; i < e; ++i) r = multiply(F, r, a);
    return r;
}

/// sum_i coeffs[i] * X_i
inline Polynomial linear_form(const Field& F, std::span<const Elem> coeffs) {
    const auto nv = static_cast<unsigned>(coeffs.size());
    Polynomial r(nv);
    for (unsigned i = 0; i < nv; ++i) {
        Monomial m(nv, 0);
        m[i] = 1;
        r.add_term(F, m, coeffs[i]);
    }
    return r;
}

/// Expanded product of linear forms; the empty product is 1.
inline Polynomial product_of_linear_forms(const Field& F, unsigned nvars, const std::vector<Coords>& factors) {
    Polynomial r = Polynomial::constant(nvars, 1);
    for (const auto& f : factors) {
        if (f.size() != nvars) throw std::invalid_argument("linear form has wrong variable count");
        r = multiply(F, r, linear_form(F, f));
    }
    return r;
}

/// Reduces modulo x_i^q - x_i: every exponent e >= q becomes ((e-1) mod (q-1)) + 1.
inline Polynomial reduce_affine(const Field& F, const Polynomial& g) {
    const unsigned q = F.q();
    Polynomial r(g.nvars());
    for (const auto& [m, c] : g.terms()) {
        Monomial red = m;
        for (auto& e : red)
            if (e >= q) e = (e - 1) % (q - 1) + 1;
        r.add_term(F, red, c);
    }
    return r;
}

/// Value of g at a point (0^0 = 1).
inline Elem evaluate(const Field& F, const Polynomial& g, std::span<const Elem> point) {
    if (point.size() != g.nvars()) throw std::invalid_argument("point has wrong number of coordinates");
    Elem acc = 0;
    for (const auto& [m, c] : g.terms()) {
        Elem t = c;
        for (std::size_t i = 0; i < m.size() && t; ++i)
            if (m[i]) t = F.mul(t, F.pow(point[i], m[i]));
        acc = F.add(acc, t);
    }
    return acc;
}

inline Elem eval_affine(const Field& F, const Polynomial& g, const AffinePoint& P) { return evaluate(F, g, P.coords); }

/// Evaluates a homogeneous f at the standard representative of Q.
inline Elem eval_projective(const Field& F, const Polynomial& f, const ProjectivePoint& Q) {
    if (f.degree() >= 0 && !f.is_homogeneous(static_cast<unsigned>(f.degree())))
        throw std::invalid_argument("polynomial is not homogeneous");
    return evaluate(F, f, Q.coords);
}

/// Batch evaluator over many points: terms are flattened and powers come
/// from a q x (maxdeg+1) table, so evaluation does no exponentiation.
class Evaluator {
public:
    Evaluator(const Field& F, const Polynomial& g) : F_(F), nvars_(g.nvars()) {
        const unsigned q = F.q();
        maxdeg_ = 0;
        for (const auto& [m, c] : g.terms()) {
            coeffs_.push_back(c);
            for (auto e : m) {
                exps_.push_back(e);
                maxdeg_ = std::max(maxdeg_, e);
            }
        }
        pow_.assign(q * (maxdeg_ + 1), 0);
        for (unsigned v = 0; v < q; ++v) {
            Elem acc = 1;
            for (unsigned e = 0; e <= maxdeg_; ++e) {
                pow_[v * (maxdeg_ + 1) + e] = acc;
                acc = F.mul(acc, static_cast<Elem>(v));
            }
        }
    }

    Elem operator()(std::span<const Elem> point) const {
        Elem acc = 0;
        const unsigned stride = maxdeg_ + 1;
        for (std::size_t t = 0; t < coeffs_.size(); ++t) {
            Elem v = coeffs_[t];
            const unsigned* e = exps_.data() + t * nvars_;
            for (unsigned i = 0; i < nvars_ && v; ++i) v = F_.mul(v, pow_[point[i] * stride + e[i]]);
            acc = F_.add(acc, v);
        }
        return acc;
    }

    /// Values at consecutive points of a flat coordinate array.
    std::vector<Elem> over(std::span<const Elem> flat, std::size_t count) const {
        std::vector<Elem> out(count);
        for (std::size_t i = 0; i < count; ++i) out[i] = (*this)(flat.subspan(i * nvars_, nvars_));
        return out;
    }

private:
    Field F_;
    unsigned nvars_;
    unsigned maxdeg_ = 0;
    std::vector<Elem> coeffs_;
    std::vector<unsigned> exps_;
    std::vector<Elem> pow_;
};

/// Lifts g in X_1..X_n to a degree-D form in X_0..X_n: each term t of
/// degree e becomes X_0^(D-e) t.
inline Polynomial homogenize(const Polynomial& g, unsigned target_degree) {
    if (g.degree() > static_cast<int>(target_degree)) throw std::invalid_argument("degree exceeds homogenization target");
    const unsigned nv = g.nvars() + 1;
    std::map<Monomial, Elem> terms;
    for (const auto& [m, c] : g.terms()) {
        Monomial h(nv);
        h[0] = target_degree - degree_of(m);
        std::copy(m.begin(), m.end(), h.begin() + 1);
        terms.emplace(std::move(h), c);
    }
    return Polynomial::from_terms(nv, std::move(terms));
}

/// Sets X_0 = 1 and drops that variable.
inline Polynomial dehomogenize(const Field& F, const Polynomial& f) {
    if (f.nvars() < 1) throw std::invalid_argument("no variable to dehomogenize");
    Polynomial r(f.nvars() - 1);
    for (const auto& [m, c] : f.terms()) r.add_term(F, Monomial(m.begin() + 1, m.end()), c);
    return r;
}

/// X_0^(d - deg g) * g^(h): a degree-d form vanishing on X_0 = 0 that
/// agrees with g on the chart X_0 = 1, so its projective weight equals the
/// affine weight of g.
inline Polynomial embed_affine(const Polynomial& g, unsigned d) {
    if (g.degree() > static_cast<int>(d)) throw std::invalid_argument("affine degree exceeds target degree");
    if (g.is_zero()) return Polynomial(g.nvars() + 1);
    const auto e = static_cast<unsigned>(g.degree());
    if (e == d && d > 0) throw std::invalid_argument("embedding needs deg(g) <= d-1");
    auto h = homogenize(g, e);
    std::map<Monomial, Elem> terms;
    for (const auto& [m, c] : h.terms()) {
        Monomial lifted = m;
        lifted[0] += d - e;
        terms.emplace(std::move(lifted), c);
    }
    return Polynomial::from_terms(h.nvars(), std::move(terms));
}

/// Text form: terms joined by " + ", factors by "*", powers by "^",
/// variables X0..Xk, coefficients as field indices. Terms are listed in
/// descending exponent-vector order; coefficient 1 is omitted except on the
/// constant term. The zero polynomial is "0".
inline std::string to_string(const Polynomial& f) {
    if (f.is_zero()) return "0";
    std::string out;
    for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it) {
        const auto& [m, c] = *it;
        if (!out.empty()) out += " + ";
        std::string term;
        if (c != 1) term = std::to_string(c);
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (!m[i]) continue;
            if (!term.empty()) term += '*';
            term += 'X' + std::to_string(i);
            if (m[i] > 1) term += '^' + std::to_string(m[i]);
        }
        out += term.empty() ? "1" : term;
    }
    return out;
}

/// Parses the text form of to_string. Whitespace is ignored; a term may
/// repeat variables and contain several integer factors.
inline Polynomial parse_polynomial(const Field& F, std::string_view text, unsigned nvars) {
    std::string s;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
    if (s.empty()) throw std::invalid_argument("empty polynomial");

    std::size_t pos = 0;
    auto fail = [&](const std::string& why) -> std::invalid_argument {
        return std::invalid_argument("cannot parse polynomial at offset " + std::to_string(pos) + ": " + why);
    };
    auto read_uint = [&]() -> unsigned {
        if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos]))) throw fail("expected a number");
        unsigned long v = 0;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
            v = v * 10 + static_cast<unsigned>(s[pos++] - '0');
            if (v > 1u << 20) throw fail("number too large");
        }
        return static_cast<unsigned>(v);
    };

    Polynomial out(nvars);
    while (true) {
        Elem coeff = 1;
        Monomial m(nvars, 0);
        while (true) {
            if (pos < s.size() && (s[pos] == 'X' || s[pos] == 'x')) {
                ++pos;
                const unsigned var = read_uint();
                if (var >= nvars) throw fail("variable X" + std::to_string(var) + " out of range");
                unsigned e = 1;
                if (pos < s.size() && s[pos] == '^') {
                    ++pos;
                    e = read_uint();
                }
                m[var] += e;
            } else {
                const unsigned c = read_uint();
                if (c >= F.q()) throw fail("coefficient " + std::to_string(c) + " is not a field element index");
                coeff = F.mul(coeff, static_cast<Elem>(c));
            }
            if (pos < s.size() && s[pos] == '*') {
                ++pos;
                continue;
            }
            break;
        }
        out.add_term(F, m, coeff);
        if (pos == s.size()) break;
        if (s[pos] != '+') throw fail("expected '+' or '*'");
        ++pos;
    }
    return out;
}

}  // namespace prmw
