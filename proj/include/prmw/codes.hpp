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
#include <atomic>
#include <bit>
#include <chrono>
#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "gf.hpp"
#include "poly.hpp"
#include "space.hpp"

namespace prmw {

enum class Family { RM, PRM };

inline const char* to_string(Family f) { return f == Family::RM ? "RM" : "PRM"; }

/// RM(n, d): polynomials of degree <= d in X1..Xn evaluated on A^n(F_q).
/// PRM(n, d): degree-d forms in X0..Xn evaluated on P^n(F_q).
struct CodeSpec {
    Family family = Family::PRM;
    Field field;
    unsigned n = 1;
    unsigned d = 1;

    unsigned nvars() const { return family == Family::RM ? n : n + 1; }

    std::uint64_t length() const {
        const unsigned q = field.q();
        if (family == Family::RM) return ipow(q, n);
        return (ipow(q, n + 1) - 1) / (q - 1);
    }
};

inline CodeSpec make_code(Family family, Field F, unsigned n, unsigned d) {
    if (n < 1) throw std::invalid_argument("n must be at least 1");
    if (d < 1) throw std::invalid_argument("d must be at least 1");
    return CodeSpec{family, std::move(F), n, d};
}

struct Codeword {
    std::vector<Elem> values;

    std::size_t weight() const {
        return static_cast<std::size_t>(std::count_if(values.begin(), values.end(), [](Elem e) { return e != 0; }));
    }

    /// Indices of the nonzero entries, relative to the code's point order.
    PointSet support() const {
        PointSet s(values.size());
        for (std::size_t i = 0; i < values.size(); ++i)
            if (values[i]) s.insert(i);
        return s;
    }
};

/// Evaluation points of a code, flattened with stride nvars().
inline std::vector<Elem> code_points(const CodeSpec& cs) {
    if (cs.family == Family::PRM) {
        ProjectiveSpace P(cs.field, cs.n);
        auto flat = P.flat_coords();
        return {flat.begin(), flat.end()};
    }
    std::vector<Elem> out;
    for (const auto& p : enumerate_affine(cs.field, cs.n)) out.insert(out.end(), p.coords.begin(), p.coords.end());
    return out;
}

/// RM: exponents <= q-1, total degree <= d. PRM: total degree exactly d.
/// Lexicographic order on exponent vectors.
inline std::vector<Monomial> monomial_basis(const CodeSpec& cs) {
    const unsigned nv = cs.nvars();
    const unsigned cap = cs.family == Family::RM ? cs.field.q() - 1 : cs.d;
    std::vector<Monomial> out;
    Monomial m(nv, 0);
    std::function<void(unsigned, unsigned)> rec = [&](unsigned var, unsigned used) {
        if (var == nv) {
            if (cs.family == Family::RM || used == cs.d) out.push_back(m);
            return;
        }
        for (unsigned e = 0; e <= cap && used + e <= cs.d; ++e) {
            m[var] = e;
            rec(var + 1, used + e);
        }
        m[var] = 0;
    };
    rec(0, 0);
    return out;
}

inline Codeword encode(const CodeSpec& cs, const Polynomial& poly) {
    if (poly.nvars() != cs.nvars()) throw std::invalid_argument("polynomial has wrong variable count for this code");
    Polynomial p = poly;
    if (cs.family == Family::RM) {
        p = reduce_affine(cs.field, poly);
        if (p.degree() > static_cast<int>(cs.d)) throw std::invalid_argument("polynomial degree exceeds code order");
    } else if (!poly.is_homogeneous(cs.d)) {
        throw std::invalid_argument("PRM input must be homogeneous of degree " + std::to_string(cs.d));
    }
    const auto pts = code_points(cs);
    return Codeword{Evaluator(cs.field, p).over(pts, static_cast<std::size_t>(cs.length()))};
}

/// Incremental row echelon basis over F_q.
class EchelonBasis {
public:
    explicit EchelonBasis(Field F) : F_(std::move(F)) {}

    /// Reduces `row` against the basis; keeps it and returns true when independent.
    bool insert(std::vector<Elem> row) {
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            const Elem c = row[pivots_[i]];
            if (!c) continue;
            const Elem f = F_.neg(c);
            for (std::size_t j = 0; j < row.size(); ++j) row[j] = F_.add(row[j], F_.mul(f, rows_[i][j]));
        }
        auto it = std::find_if(row.begin(), row.end(), [](Elem e) { return e != 0; });
        if (it == row.end()) return false;
        const Elem s = F_.inv(*it);
        for (auto& e : row) e = F_.mul(e, s);
        pivots_.push_back(static_cast<std::size_t>(it - row.begin()));
        rows_.push_back(std::move(row));
        return true;
    }

    std::size_t rank() const { return rows_.size(); }

private:
    Field F_;
    std::vector<std::vector<Elem>> rows_;
    std::vector<std::size_t> pivots_;
};

inline std::size_t rank_over(const Field& F, const std::vector<std::vector<Elem>>& rows) {
    EchelonBasis basis(F);
    for (const auto& r : rows) basis.insert(r);
    return basis.rank();
}

/// One codeword per basis monomial; its rank is the code dimension.
struct EvaluationMatrix {
    std::vector<Monomial> monomials;
    std::vector<std::vector<Elem>> rows;
    std::size_t rank = 0;
};

inline EvaluationMatrix evaluation_matrix(const CodeSpec& cs) {
    EvaluationMatrix em;
    em.monomials = monomial_basis(cs);
    const auto pts = code_points(cs);
    for (const auto& m : em.monomials)
        em.rows.push_back(Evaluator(cs.field, Polynomial::monomial(m)).over(pts, static_cast<std::size_t>(cs.length())));
    em.rank = rank_over(cs.field, em.rows);
    return em;
}

inline std::size_t dimension(const CodeSpec& cs) { return evaluation_matrix(cs).rank; }

/// Generator rows are the evaluations of an independent subset of the
/// monomial basis (first independent ones in basis order), so message m
/// is the polynomial sum_j m_j * monomials[j].
struct GeneratorMatrix {
    CodeSpec code;
    std::vector<Monomial> monomials;
    std::vector<std::vector<Elem>> rows;

    std::size_t dim() const { return rows.size(); }
    std::size_t length() const { return rows.empty() ? static_cast<std::size_t>(code.length()) : rows.front().size(); }

    Polynomial polynomial(std::span<const Elem> message) const {
        Polynomial p(code.nvars());
        for (std::size_t j = 0; j < message.size(); ++j) p.add_term(code.field, monomials[j], message[j]);
        return p;
    }
};

inline GeneratorMatrix generator_matrix(const CodeSpec& cs) {
    auto em = evaluation_matrix(cs);
    GeneratorMatrix g{cs, {}, {}};
    EchelonBasis basis(cs.field);
    for (std::size_t i = 0; i < em.rows.size(); ++i)
        if (basis.insert(em.rows[i])) {
            g.monomials.push_back(em.monomials[i]);
            g.rows.push_back(std::move(em.rows[i]));
        }
    return g;
}

namespace detail {

inline std::uint64_t saturating_pow(std::uint64_t base, std::size_t e) {
    std::uint64_t r = 1;
    for (std::size_t i = 0; i < e; ++i) {
        if (r > std::numeric_limits<std::uint64_t>::max() / base) return std::numeric_limits<std::uint64_t>::max();
        r *= base;
    }
    return r;
}

/// Reflected q-ary Gray code over L digits, least significant first.
/// Consecutive words differ in exactly one digit, by +-1.
class GrayCounter {
public:
    GrayCounter(unsigned q, unsigned L, std::uint64_t x) : q_(q), digits_(L), dirs_(L) {
        std::vector<unsigned> c(L);
        for (unsigned i = 0; i < L; ++i, x /= q) c[i] = static_cast<unsigned>(x % q);
        bool flip = false;
        for (unsigned i = L; i-- > 0;) {
            const unsigned e = flip ? q - 1 - c[i] : c[i];
            digits_[i] = e;
            dirs_[i] = flip ? -1 : 1;
            if (e & 1) flip = !flip;
        }
    }

    const std::vector<unsigned>& digits() const { return digits_; }

    /// Advances one step; returns the changed digit and its old value.
    /// Must not be called on the last word.
    std::pair<unsigned, unsigned> step() {
        unsigned i = 0;
        while (true) {
            const int next = static_cast<int>(digits_[i]) + dirs_[i];
            if (next >= 0 && next < static_cast<int>(q_)) break;
            dirs_[i] = -dirs_[i];
            ++i;
        }
        const unsigned old = digits_[i];
        digits_[i] = static_cast<unsigned>(static_cast<int>(old) + dirs_[i]);
        return {i, old};
    }

private:
    unsigned q_;
    std::vector<unsigned> digits_;
    std::vector<int> dirs_;
};

/// Codeword over a general field, weight recomputed in the update pass.
template <bool Xor>
struct ByteWord {
    std::vector<Elem> v;
    std::size_t w = 0;
    const Elem* add = nullptr;  // q x q table
    unsigned q = 0;

    void reset(std::size_t len) {
        v.assign(len, 0);
        w = 0;
    }

    void accumulate(const Elem* s) {
        std::size_t cnt = 0;
        const std::size_t len = v.size();
        Elem* p = v.data();
        if constexpr (Xor) {
            for (std::size_t i = 0; i < len; ++i) {
                p[i] ^= s[i];
                cnt += p[i] != 0;
            }
        } else {
            for (std::size_t i = 0; i < len; ++i) {
                p[i] = add[p[i] * q + s[i]];
                cnt += p[i] != 0;
            }
        }
        w = cnt;
    }

    std::size_t weight() const { return w; }
    std::span<const Elem> values() const { return v; }
};

/// Binary codeword packed into 64-bit words.
struct BitWord {
    std::vector<std::uint64_t> v;

    void reset(std::size_t len) { v.assign((len + 63) / 64, 0); }

    void accumulate(const std::uint64_t* s) {
        for (std::size_t i = 0; i < v.size(); ++i) v[i] ^= s[i];
    }

    std::size_t weight() const {
        std::size_t c = 0;
        for (auto x : v) c += static_cast<std::size_t>(std::popcount(x));
        return c;
    }
};

/// Message space layout. With scalar skipping, messages are grouped by the
/// position t of their leading 1; group t has q^(k-1-t) members whose tail
/// (coordinates t+1..k-1) runs through a Gray code. Without skipping there
/// is one group of all q^k messages and the zero message is excluded.
struct MessageLayout {
    unsigned q = 2;
    unsigned k = 0;
    bool skip = true;

    struct Group {
        int lead;  // -1: no leading row
        unsigned tail_len;
        std::uint64_t first_x;  // first Gray index used in this group
        std::uint64_t begin, end;  // global index range
    };

    std::vector<Group> groups() const {
        std::vector<Group> gs;
        std::uint64_t at = 0;
        if (skip) {
            for (unsigned t = 0; t < k; ++t) {
                const std::uint64_t sz = ipow(q, k - 1 - t);
                gs.push_back({static_cast<int>(t), k - 1 - t, 0, at, at + sz});
                at += sz;
            }
        } else if (k > 0) {
            gs.push_back({-1, k, 1, 0, ipow(q, k) - 1});
        }
        return gs;
    }

    std::uint64_t count() const {
        auto gs = groups();
        return gs.empty() ? 0 : gs.back().end;
    }

    /// Tail digit i drives generator row k-1-i.
    unsigned row_of_digit(unsigned i) const { return k - 1 - i; }

    std::vector<Elem> message(std::uint64_t index) const {
        std::vector<Elem> m(k, 0);
        for (const auto& g : groups()) {
            if (index < g.begin || index >= g.end) continue;
            GrayCounter gc(q, g.tail_len, g.first_x + (index - g.begin));
            if (g.lead >= 0) m[static_cast<unsigned>(g.lead)] = 1;
            for (unsigned i = 0; i < g.tail_len; ++i) m[row_of_digit(i)] = static_cast<Elem>(gc.digits()[i]);
            return m;
        }
        throw std::out_of_range("message index out of range");
    }
};

}  // namespace detail

struct EnumerationOptions {
    std::uint64_t budget = std::uint64_t{1} << 24;  // max q^dim
    unsigned threads = 1;
    bool spectrum = false;
    bool skip_scalar_multiples = true;
    double time_limit_seconds = 0;  // 0: unlimited
};

/// Result of the brute-force weight oracle.
struct LowWeights {
    std::size_t dimension = 0;
    std::size_t length = 0;
    std::uint64_t enumerated = 0;  // codewords visited (one per scalar class when skipping)
    std::optional<std::uint64_t> w1, w2;
    std::optional<Polynomial> w1_witness, w2_witness;
    std::vector<std::uint64_t> spectrum;  // count of nonzero codewords by weight, when requested
};

namespace detail {

struct WeightTally {
    static constexpr std::uint64_t none = std::numeric_limits<std::uint64_t>::max();
    std::uint64_t w1 = none, w2 = none, i1 = 0, i2 = 0;
    std::vector<std::uint64_t> hist;

    void add(std::uint64_t w, std::uint64_t idx) {
        if (!hist.empty()) ++hist[w];
        if (w < w1) {
            if (w1 != none) {
                w2 = w1;
                i2 = i1;
            }
            w1 = w;
            i1 = idx;
        } else if (w != w1 && w < w2) {
            w2 = w;
            i2 = idx;
        }
    }

    // Chunks cover increasing index ranges, so the earlier index wins ties.
    void merge(const WeightTally& o) {
        for (auto [w, i] : {std::pair{o.w1, o.i1}, std::pair{o.w2, o.i2}}) {
            if (w == none) continue;
            if (w == w1) i1 = std::min(i1, i);
            else if (w == w2) i2 = std::min(i2, i);
            else if (w < w1) {
                w2 = w1, i2 = i1;
                w1 = w, i1 = i;
            } else if (w < w2) {
                w2 = w, i2 = i;
            }
        }
        if (!o.hist.empty())
            for (std::size_t j = 0; j < hist.size(); ++j) hist[j] += o.hist[j];
    }
};

/// Walks global message indices [lo, hi), calling sink(word, index).
template <class Word, class Scaled, class Sink>
void walk_range(const MessageLayout& layout, std::size_t len, const Scaled& scaled, Word word, std::uint64_t lo,
                std::uint64_t hi, Sink&& sink, const std::function<bool()>& should_stop) {
    std::uint64_t since_check = 0;
    for (const auto& g : layout.groups()) {
        const std::uint64_t a = std::max(lo, g.begin), b = std::min(hi, g.end);
        if (a >= b) continue;
        GrayCounter gc(layout.q, g.tail_len, g.first_x + (a - g.begin));
        word.reset(len);
        if (g.lead >= 0) word.accumulate(scaled(static_cast<unsigned>(g.lead), 1));
        for (unsigned i = 0; i < g.tail_len; ++i)
            if (gc.digits()[i]) word.accumulate(scaled(layout.row_of_digit(i), gc.digits()[i]));
        for (std::uint64_t idx = a;; ++idx) {
            sink(word, idx);
            if (idx + 1 == b) break;
            auto [i, old] = gc.step();
            word.accumulate(scaled.delta(layout.row_of_digit(i), old, gc.digits()[i]));
            if (++since_check == 1u << 14) {
                since_check = 0;
                if (should_stop()) return;
            }
        }
    }
}

/// Scaled generator rows c * g_j as byte vectors.
struct ByteRows {
    const Field* F;
    std::size_t len;
    std::vector<std::vector<Elem>> rows;  // index row * q + c

    ByteRows(const Field& field, const std::vector<std::vector<Elem>>& gen) : F(&field), len(gen.empty() ? 0 : gen[0].size()) {
        const unsigned q = field.q();
        for (const auto& r : gen)
            for (unsigned c = 0; c < q; ++c) {
                std::vector<Elem> s(r.size());
                for (std::size_t i = 0; i < r.size(); ++i) s[i] = field.mul(static_cast<Elem>(c), r[i]);
                rows.push_back(std::move(s));
            }
    }

    const Elem* operator()(unsigned row, unsigned c) const { return rows[row * F->q() + c].data(); }

    const Elem* delta(unsigned row, unsigned from, unsigned to) const {
        return (*this)(row, F->sub(static_cast<Elem>(to), static_cast<Elem>(from)));
    }
};

struct BitRows {
    std::vector<std::vector<std::uint64_t>> rows;

    explicit BitRows(const std::vector<std::vector<Elem>>& gen) {
        for (const auto& r : gen) {
            std::vector<std::uint64_t> packed((r.size() + 63) / 64, 0);
            for (std::size_t i = 0; i < r.size(); ++i)
                if (r[i]) packed[i >> 6] |= std::uint64_t{1} << (i & 63);
            rows.push_back(std::move(packed));
        }
    }

    const std::uint64_t* operator()(unsigned row, unsigned) const { return rows[row].data(); }
    const std::uint64_t* delta(unsigned row, unsigned, unsigned) const { return rows[row].data(); }
};

/// Splits [0, total) into `parts` contiguous chunks and runs fn(lo, hi, part)
/// on worker threads.
inline void run_partitioned(std::uint64_t total, unsigned parts, const std::function<void(std::uint64_t, std::uint64_t, unsigned)>& fn) {
    parts = std::max(1u, parts);
    if (parts == 1 || total < parts) {
        fn(0, total, 0);
        return;
    }
    std::vector<std::thread> workers;
    for (unsigned p = 0; p < parts; ++p) {
        const std::uint64_t lo = total / parts * p + std::min<std::uint64_t>(p, total % parts);
        const std::uint64_t hi = lo + total / parts + (p < total % parts ? 1 : 0);
        workers.emplace_back(fn, lo, hi, p);
    }
    for (auto& w : workers) w.join();
}

}  // namespace detail

/// Brute-force weight oracle: enumerates every nonzero codeword (one per
/// scalar class by default) and returns the two smallest distinct weights
/// with witness polynomials. Throws BudgetExceeded when q^dim exceeds the
/// budget or the time limit is hit.
inline LowWeights exhaustive_low_weights(const GeneratorMatrix& G, const EnumerationOptions& opt = {}) {
    const Field& F = G.code.field;
    const unsigned q = F.q();
    const auto k = static_cast<unsigned>(G.dim());
    const std::size_t len = G.length();
    if (detail::saturating_pow(q, k) > opt.budget)
        throw BudgetExceeded("q^dim = " + std::to_string(q) + "^" + std::to_string(k) + " exceeds the codeword budget");

    const detail::MessageLayout layout{q, k, opt.skip_scalar_multiples};
    const std::uint64_t total = layout.count();
    const unsigned parts = static_cast<unsigned>(std::min<std::uint64_t>(std::max(1u, opt.threads), std::max<std::uint64_t>(total, 1)));

    std::vector<detail::WeightTally> tallies(parts);
    for (auto& t : tallies)
        if (opt.spectrum) t.hist.assign(len + 1, 0);

    std::atomic<bool> stop{false};
    const auto deadline = std::chrono::steady_clock::now() + std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                                                                 std::chrono::duration<double>(opt.time_limit_seconds));
    std::function<bool()> should_stop = [&]() {
        if (stop.load(std::memory_order_relaxed)) return true;
        if (opt.time_limit_seconds > 0 && std::chrono::steady_clock::now() > deadline) {
            stop = true;
            return true;
        }
        return false;
    };

    auto work = [&](std::uint64_t lo, std::uint64_t hi, unsigned part) {
        auto& tally = tallies[part];
        auto sink = [&tally](const auto& word, std::uint64_t idx) { tally.add(word.weight(), idx); };
        if (q == 2) {
            detail::BitRows rows(G.rows);
            detail::walk_range(layout, len, rows, detail::BitWord{}, lo, hi, sink, should_stop);
        } else {
            detail::ByteRows rows(F, G.rows);
            if (F.characteristic_two()) {
                detail::walk_range(layout, len, rows, detail::ByteWord<true>{}, lo, hi, sink, should_stop);
            } else {
                detail::ByteWord<false> w;
                w.add = F.add_row(0);
                w.q = q;
                detail::walk_range(layout, len, rows, std::move(w), lo, hi, sink, should_stop);
            }
        }
    };
    detail::run_partitioned(total, parts, work);
    if (stop) throw BudgetExceeded("time limit reached during exhaustive enumeration");

    detail::WeightTally all;
    if (opt.spectrum) all.hist.assign(len + 1, 0);
    for (const auto& t : tallies) all.merge(t);

    LowWeights r;
    r.dimension = k;
    r.length = len;
    r.enumerated = total;
    if (all.w1 != detail::WeightTally::none) {
        r.w1 = all.w1;
        r.w1_witness = G.polynomial(layout.message(all.i1));
    }
    if (all.w2 != detail::WeightTally::none) {
        r.w2 = all.w2;
        r.w2_witness = G.polynomial(layout.message(all.i2));
    }
    if (opt.spectrum) {
        r.spectrum = std::move(all.hist);
        if (opt.skip_scalar_multiples)
            for (auto& c : r.spectrum) c *= q - 1;
    }
    return r;
}

inline LowWeights exhaustive_low_weights(const CodeSpec& cs, const EnumerationOptions& opt = {}) {
    return exhaustive_low_weights(generator_matrix(cs), opt);
}

/// Visits every nonzero codeword (one per scalar class when `skip` is set),
/// in message-index order: fn(values, weight, message_index).
inline void for_each_codeword(const GeneratorMatrix& G, bool skip,
                              const std::function<void(std::span<const Elem>, std::size_t, std::uint64_t)>& fn) {
    const Field& F = G.code.field;
    const detail::MessageLayout layout{F.q(), static_cast<unsigned>(G.dim()), skip};
    detail::ByteRows rows(F, G.rows);
    detail::ByteWord<false> w;
    w.add = F.add_row(0);
    w.q = F.q();
    detail::walk_range(layout, G.length(), rows, std::move(w), 0, layout.count(),
                       [&](const auto& word, std::uint64_t idx) { fn(word.values(), word.weight(), idx); },
                       [] { return false; });
}

/// Message vector for an index produced by for_each_codeword.
inline std::vector<Elem> message_at(const GeneratorMatrix& G, bool skip, std::uint64_t index) {
    return detail::MessageLayout{G.code.field.q(), static_cast<unsigned>(G.dim()), skip}.message(index);
}

}  // namespace prmw
