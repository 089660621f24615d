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
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace prmw {

/// Largest field order accepted by make_field.
inline constexpr unsigned kMaxFieldOrder = 27;

/// A field element, encoded by its index 0..q-1. The base-p digits of the
/// index are the coefficients (lowest degree first) of a polynomial of
/// degree < m over F_p. Index 0 is zero, index 1 is one.
using Elem = std::uint8_t;

namespace detail {

inline bool is_prime(unsigned p) {
    if (p < 2) return false;
    for (unsigned f = 2; f * f <= p; ++f)
        if (p % f == 0) return false;
    return true;
}

// Polynomials over F_p as coefficient vectors, lowest degree first.
using PolyP = std::vector<unsigned>;

inline void trim(PolyP& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

inline PolyP poly_mod(PolyP a, const PolyP& m, unsigned p) {
    trim(a);
    const std::size_t dm = m.size() - 1;
    unsigned lead_inv = 1;
    while ((lead_inv * m.back()) % p != 1) ++lead_inv;
    while (a.size() > dm) {
        const unsigned factor = (a.back() * lead_inv) % p;
        const std::size_t shift = a.size() - 1 - dm;
        for (std::size_t i = 0; i <= dm; ++i)
            a[shift + i] = (a[shift + i] + p * p - factor * m[i] % p) % p;
        trim(a);
    }
    return a;
}

// True iff the monic polynomial `m` (degree >= 2) has no monic factor of
// degree 1..deg/2 over F_p. Degree-1 factors are reported through `has_root`.
inline bool is_irreducible(const PolyP& m, unsigned p, bool& has_root) {
    const std::size_t deg = m.size() - 1;
    has_root = false;
    for (unsigned x = 0; x < p; ++x) {
        unsigned acc = 0;
        for (std::size_t i = deg + 1; i-- > 0;) acc = (acc * x + m[i]) % p;
        if (acc == 0) {
            has_root = true;
            return false;
        }
    }
    for (std::size_t fd = 2; 2 * fd <= deg; ++fd) {
        // all monic divisors of degree fd
        std::size_t count = 1;
        for (std::size_t i = 0; i < fd; ++i) count *= p;
        for (std::size_t idx = 0; idx < count; ++idx) {
            PolyP f(fd + 1, 0);
            std::size_t v = idx;
            for (std::size_t i = 0; i < fd; ++i, v /= p) f[i] = static_cast<unsigned>(v % p);
            f[fd] = 1;
            if (poly_mod(m, f, p).empty()) return false;
        }
    }
    return true;
}

}  // namespace detail

/// Finite field F_q, q = p^m, with table-driven arithmetic.
///
/// Copies are cheap and share the same immutable tables, so a Field can be
/// held by value everywhere and read concurrently.
class Field {
public:
    /// Builds F_{p^m}. `modulus` lists the coefficients of a monic degree-m
    /// polynomial, lowest degree first; when omitted the built-in table is
    /// used (q in {4, 8, 9, 16, 25, 27}). Prime fields ignore the modulus.
    static Field make(unsigned p, unsigned m, std::optional<std::vector<unsigned>> modulus = std::nullopt) {
        if (!detail::is_prime(p)) throw std::invalid_argument("field characteristic " + std::to_string(p) + " is not prime");
        if (m < 1) throw std::invalid_argument("extension degree must be at least 1");
        unsigned long long q = 1;
        for (unsigned i = 0; i < m; ++i) {
            q *= p;
            if (q > kMaxFieldOrder) throw std::invalid_argument("field order exceeds the supported maximum " + std::to_string(kMaxFieldOrder));
        }

        detail::PolyP mod;
        if (m == 1) {
            mod = {0, 1};
        } else if (modulus) {
            mod = *modulus;
            if (mod.size() != m + 1) throw std::invalid_argument("modulus must have degree " + std::to_string(m));
            for (unsigned c : mod)
                if (c >= p) throw std::invalid_argument("modulus coefficient out of range 0..p-1");
            if (mod.back() != 1) throw std::invalid_argument("modulus must be monic");
            bool has_root = false;
            if (!detail::is_irreducible(mod, p, has_root))
                throw std::invalid_argument(has_root ? "modulus has a root in F_p" : "modulus is reducible over F_p");
        } else {
            mod = builtin_modulus(static_cast<unsigned>(q));
        }

        auto t = std::make_shared<Tables>();
        t->p = p;
        t->m = m;
        t->q = static_cast<unsigned>(q);
        t->modulus = mod;
        t->build();
        return Field(std::move(t));
    }

    /// Built-in moduli, lowest degree first.
    static detail::PolyP builtin_modulus(unsigned q) {
        switch (q) {
            case 4: return {1, 1, 1};        // x^2 + x + 1
            case 8: return {1, 1, 0, 1};     // x^3 + x + 1
            case 9: return {1, 0, 1};        // x^2 + 1
            case 16: return {1, 1, 0, 0, 1}; // x^4 + x + 1
            case 25: return {2, 0, 1};       // x^2 + 2
            case 27: return {1, 2, 0, 1};    // x^3 + 2x + 1
            default: throw std::invalid_argument("no built-in modulus for q = " + std::to_string(q) + "; supply one");
        }
    }

    unsigned p() const { return t_->p; }
    unsigned m() const { return t_->m; }
    unsigned q() const { return t_->q; }
    const std::vector<unsigned>& modulus() const { return t_->modulus; }
    bool characteristic_two() const { return t_->p == 2; }

    Elem add(Elem a, Elem b) const { return t_->add[a * t_->q + b]; }
    Elem sub(Elem a, Elem b) const { return t_->add[a * t_->q + t_->neg[b]]; }
    Elem neg(Elem a) const { return t_->neg[a]; }
    Elem mul(Elem a, Elem b) const { return t_->mul[a * t_->q + b]; }

    Elem inv(Elem a) const {
        if (a == 0) throw std::domain_error("inverse of zero");
        return t_->inv[a];
    }

    Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }

    Elem pow(Elem a, unsigned long long e) const {
        Elem r = 1;
        Elem base = a;
        while (e) {
            if (e & 1) r = mul(r, base);
            base = mul(base, base);
            e >>= 1;
        }
        return r;
    }

    /// Row `a` of the addition table (q entries).
    const Elem* add_row(Elem a) const { return t_->add.data() + a * t_->q; }
    const Elem* mul_row(Elem a) const { return t_->mul.data() + a * t_->q; }

    /// Elements in index order 0, 1, ..., q-1.
    std::vector<Elem> elements() const {
        std::vector<Elem> out(q());
        for (unsigned i = 0; i < q(); ++i) out[i] = static_cast<Elem>(i);
        return out;
    }

    /// "q" for prime fields, otherwise "q:c_m,...,c_0" (highest degree first).
    std::string describe() const {
        std::string s = std::to_string(q());
        if (m() > 1) {
            s += ':';
            for (std::size_t i = modulus().size(); i-- > 0;) {
                s += std::to_string(modulus()[i]);
                if (i) s += ',';
            }
        }
        return s;
    }

    friend bool operator==(const Field& a, const Field& b) {
        return a.t_ == b.t_ || (a.p() == b.p() && a.m() == b.m() && a.modulus() == b.modulus());
    }

private:
    struct Tables {
        unsigned p = 0, m = 0, q = 0;
        std::vector<unsigned> modulus;
        std::vector<Elem> add, mul, neg, inv;

        std::vector<unsigned> digits(unsigned x) const {
            std::vector<unsigned> d(m);
            for (unsigned i = 0; i < m; ++i, x /= p) d[i] = x % p;
            return d;
        }

        unsigned undigits(const std::vector<unsigned>& d) const {
            unsigned x = 0;
            for (std::size_t i = d.size(); i-- > 0;) x = x * p + d[i];
            return x;
        }

        void build() {
            add.assign(q * q, 0);
            mul.assign(q * q, 0);
            neg.assign(q, 0);
            inv.assign(q, 0);
            for (unsigned a = 0; a < q; ++a) {
                const auto da = digits(a);
                std::vector<unsigned> dn(m);
                for (unsigned i = 0; i < m; ++i) dn[i] = (p - da[i]) % p;
                neg[a] = static_cast<Elem>(undigits(dn));
                for (unsigned b = 0; b < q; ++b) {
                    const auto db = digits(b);
                    std::vector<unsigned> ds(m);
                    for (unsigned i = 0; i < m; ++i) ds[i] = (da[i] + db[i]) % p;
                    add[a * q + b] = static_cast<Elem>(undigits(ds));

                    detail::PolyP prod(2 * m - 1, 0);
                    for (unsigned i = 0; i < m; ++i)
                        for (unsigned j = 0; j < m; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p;
                    auto r = m == 1 ? prod : detail::poly_mod(prod, modulus, p);
                    r.resize(m, 0);
                    mul[a * q + b] = static_cast<Elem>(undigits(r));
                }
            }
            for (unsigned a = 1; a < q; ++a)
                for (unsigned b = 1; b < q; ++b)
                    if (mul[a * q + b] == 1) inv[a] = static_cast<Elem>(b);
        }
    };

    explicit Field(std::shared_ptr<const Tables> t) : t_(std::move(t)) {}

    std::shared_ptr<const Tables> t_;
};

inline Field make_field(unsigned p, unsigned m, std::optional<std::vector<unsigned>> modulus = std::nullopt) {
    return Field::make(p, m, std::move(modulus));
}

/// Field for a prime-power order q using the built-in modulus table.
inline Field field_of_order(unsigned q) {
    for (unsigned p = 2; p <= q; ++p) {
        if (!detail::is_prime(p) || q % p != 0) continue;
        unsigned m = 0;
        unsigned v = q;
        while (v % p == 0) {
            v /= p;
            ++m;
        }
        if (v != 1) break;
        return make_field(p, m);
    }
    throw std::invalid_argument(std::to_string(q) + " is not a prime power");
}

/// Parses `q`, `p^m`, optionally followed by `:c_m,...,c_0` listing the
/// modulus coefficients highest degree first (`4:1,1,1` is x^2+x+1).
inline Field parse_field(std::string_view text) {
    auto to_uint = [&](std::string_view s) -> unsigned {
        if (s.empty()) throw std::invalid_argument("malformed field spec '" + std::string(text) + "'");
        unsigned long v = 0;
        for (char c : s) {
            if (c < '0' || c > '9') throw std::invalid_argument("malformed field spec '" + std::string(text) + "'");
            v = v * 10 + static_cast<unsigned>(c - '0');
            if (v > 1u << 20) throw std::invalid_argument("field spec value too large");
        }
        return static_cast<unsigned>(v);
    };

    std::string_view head = text;
    std::optional<std::vector<unsigned>> modulus;
    if (auto colon = text.find(':'); colon != std::string_view::npos) {
        head = text.substr(0, colon);
        std::vector<unsigned> coeffs;
        std::string_view rest = text.substr(colon + 1);
        while (true) {
            auto comma = rest.find(',');
            coeffs.push_back(to_uint(rest.substr(0, comma)));
            if (comma == std::string_view::npos) break;
            rest = rest.substr(comma + 1);
        }
        modulus = std::vector<unsigned>(coeffs.rbegin(), coeffs.rend());
    }

    unsigned p = 0, m = 0;
    if (auto caret = head.find('^'); caret != std::string_view::npos) {
        p = to_uint(head.substr(0, caret));
        m = to_uint(head.substr(caret + 1));
    } else {
        const unsigned q = to_uint(head);
        if (q < 2) throw std::invalid_argument(std::to_string(q) + " is not a prime power");
        for (p = 2; q % p != 0; ++p) {
        }
        unsigned v = q;
        while (v % p == 0) {
            v /= p;
            ++m;
        }
        if (v != 1) throw std::invalid_argument(std::to_string(q) + " is not a prime power");
    }
    return make_field(p, m, std::move(modulus));
}

}  // namespace prmw
