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
#include <bit>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "gf.hpp"

namespace prmw {

using Coords = std::vector<Elem>;

/// Thrown when a combinatorial search would exceed its configured budget.
class BudgetExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline std::uint64_t ipow(std::uint64_t base, unsigned e) {
    std::uint64_t r = 1;
    while (e--) r *= base;
    return r;
}

struct AffinePoint {
    Coords coords;
    friend bool operator==(const AffinePoint&, const AffinePoint&) = default;
};

/// Standard representative: the first nonzero coordinate is 1.
struct ProjectivePoint {
    Coords coords;
    friend bool operator==(const ProjectivePoint&, const ProjectivePoint&) = default;
};

/// Dual coordinates, normalized like a point. P lies on H iff sum c_i P_i = 0.
struct Hyperplane {
    Coords coeffs;

    bool contains(const Field& F, std::span<const Elem> point) const {
        Elem acc = 0;
        for (std::size_t i = 0; i < coeffs.size(); ++i) acc = F.add(acc, F.mul(coeffs[i], point[i]));
        return acc == 0;
    }

    friend bool operator==(const Hyperplane&, const Hyperplane&) = default;
};

/// Projective subspace of dimension r, stored as its reduced row-echelon basis.
struct LinearSubspace {
    unsigned dim = 0;
    std::vector<Coords> basis;
    friend bool operator==(const LinearSubspace&, const LinearSubspace&) = default;
};

/// Fixed-size set of point indices.
class PointSet {
public:
    PointSet() = default;
    explicit PointSet(std::size_t universe) : size_(universe), words_((universe + 63) / 64, 0) {}

    static PointSet full(std::size_t universe) {
        PointSet s(universe);
        for (std::size_t i = 0; i < universe; ++i) s.insert(i);
        return s;
    }

    std::size_t universe() const { return size_; }
    void insert(std::size_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
    void erase(std::size_t i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
    bool contains(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1; }

    std::size_t size() const {
        std::size_t c = 0;
        for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
        return c;
    }

    bool empty() const {
        return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
    }

    bool intersects(const PointSet& o) const {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & o.words_[i]) return true;
        return false;
    }

    bool is_subset_of(const PointSet& o) const {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & ~o.words_[i]) return false;
        return true;
    }

    PointSet& operator|=(const PointSet& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
        return *this;
    }

    PointSet complement() const {
        PointSet c(size_);
        for (std::size_t i = 0; i < words_.size(); ++i) c.words_[i] = ~words_[i];
        if (size_ % 64) c.words_.back() &= (std::uint64_t{1} << (size_ % 64)) - 1;
        return c;
    }

    std::vector<std::size_t> indices() const {
        std::vector<std::size_t> out;
        for (std::size_t i = 0; i < size_; ++i)
            if (contains(i)) out.push_back(i);
        return out;
    }

    friend bool operator==(const PointSet&, const PointSet&) = default;

private:
    std::size_t size_ = 0;
    std::vector<std::uint64_t> words_;
};

/// A^n(F_q) in lexicographic order, coordinate 1 most significant.
inline std::vector<AffinePoint> enumerate_affine(const Field& F, unsigned n) {
    if (n < 1) throw std::invalid_argument("dimension must be at least 1");
    const unsigned q = F.q();
    const std::uint64_t count = ipow(q, n);
    std::vector<AffinePoint> out;
    out.reserve(count);
    for (std::uint64_t idx = 0; idx < count; ++idx) {
        Coords c(n);
        std::uint64_t v = idx;
        for (unsigned i = n; i-- > 0; v /= q) c[i] = static_cast<Elem>(v % q);
        out.push_back({std::move(c)});
    }
    return out;
}

inline ProjectivePoint normalize(const Field& F, std::span<const Elem> raw) {
    auto lead = std::find_if(raw.begin(), raw.end(), [](Elem e) { return e != 0; });
    if (lead == raw.end()) throw std::invalid_argument("zero vector is not a projective point");
    const Elem s = F.inv(*lead);
    ProjectivePoint p{Coords(raw.begin(), raw.end())};
    for (auto& c : p.coords) c = F.mul(c, s);
    return p;
}

/// P^n(F_q) with its frozen point order: grouped by the position of the
/// leading 1 (position 0 first), lexicographic inside a group. The first q^n
/// points are exactly (1 : x) for x in A^n(F_q), in enumerate_affine order.
class ProjectiveSpace {
public:
    ProjectiveSpace(Field F, unsigned n) : F_(std::move(F)), n_(n) {
        if (n < 1) throw std::invalid_argument("dimension must be at least 1");
        const unsigned q = F_.q();
        std::uint64_t offset = 0;
        for (unsigned lead = 0; lead <= n; ++lead) {
            group_offset_.push_back(offset);
            offset += ipow(q, n - lead);
        }
        size_ = offset;
        coords_.assign(size_ * (n + 1), 0);
        std::size_t row = 0;
        for (unsigned lead = 0; lead <= n; ++lead) {
            const unsigned tail = n - lead;
            const std::uint64_t count = ipow(q, tail);
            for (std::uint64_t idx = 0; idx < count; ++idx, ++row) {
                Elem* c = coords_.data() + row * (n + 1);
                c[lead] = 1;
                std::uint64_t v = idx;
                for (unsigned i = n; i > lead; --i, v /= q) c[i] = static_cast<Elem>(v % q);
            }
        }
    }

    const Field& field() const { return F_; }
    unsigned dim() const { return n_; }
    std::size_t size() const { return size_; }
    std::size_t affine_chart_size() const { return group_offset_.size() > 1 ? group_offset_[1] : size_; }

    std::span<const Elem> point(std::size_t i) const { return {coords_.data() + i * (n_ + 1), n_ + 1}; }
    std::span<const Elem> flat_coords() const { return coords_; }

    /// Index of an already-normalized coordinate vector.
    std::size_t index_of(std::span<const Elem> c) const {
        unsigned lead = 0;
        while (c[lead] == 0) ++lead;
        std::uint64_t v = 0;
        for (unsigned i = lead + 1; i <= n_; ++i) v = v * F_.q() + c[i];
        return group_offset_[lead] + v;
    }

    std::size_t index_of_raw(std::span<const Elem> raw) const { return index_of(normalize(F_, raw).coords); }

    std::vector<ProjectivePoint> points() const {
        std::vector<ProjectivePoint> out;
        out.reserve(size_);
        for (std::size_t i = 0; i < size_; ++i) {
            auto p = point(i);
            out.push_back({Coords(p.begin(), p.end())});
        }
        return out;
    }

private:
    Field F_;
    unsigned n_;
    std::size_t size_ = 0;
    std::vector<std::uint64_t> group_offset_;
    std::vector<Elem> coords_;
};

inline std::vector<ProjectivePoint> enumerate_projective(const Field& F, unsigned n) {
    return ProjectiveSpace(F, n).points();
}

inline std::vector<Hyperplane> enumerate_hyperplanes(const Field& F, unsigned n) {
    std::vector<Hyperplane> out;
    for (auto& p : enumerate_projective(F, n)) out.push_back({std::move(p.coords)});
    return out;
}

/// Calls `fn(subspace)` for every projective subspace of dimension r of P^n,
/// in canonical order: pivot columns ascending (lexicographic combinations),
/// then free entries as a base-q counter. Stops early when fn returns false.
inline void for_each_subspace(const Field& F, unsigned n, unsigned r, const std::function<bool(const LinearSubspace&)>& fn) {
    if (r > n) throw std::invalid_argument("subspace dimension exceeds ambient dimension");
    const unsigned rows = r + 1, cols = n + 1, q = F.q();
    std::vector<unsigned> piv(rows);
    for (unsigned i = 0; i < rows; ++i) piv[i] = i;
    while (true) {
        // free slots: (row, col) with col > piv[row] and col not a pivot
        std::vector<std::pair<unsigned, unsigned>> slots;
        for (unsigned i = 0; i < rows; ++i)
            for (unsigned c = piv[i] + 1; c < cols; ++c)
                if (std::find(piv.begin(), piv.end(), c) == piv.end()) slots.emplace_back(i, c);
        std::vector<Elem> vals(slots.size(), 0);
        while (true) {
            LinearSubspace s{r, std::vector<Coords>(rows, Coords(cols, 0))};
            for (unsigned i = 0; i < rows; ++i) s.basis[i][piv[i]] = 1;
            for (std::size_t j = 0; j < slots.size(); ++j) s.basis[slots[j].first][slots[j].second] = vals[j];
            if (!fn(s)) return;
            std::size_t j = slots.size();
            while (j > 0 && ++vals[j - 1] == q) vals[--j] = 0;
            if (j == 0) break;
        }
        // next combination of pivot columns
        int i = static_cast<int>(rows) - 1;
        while (i >= 0 && piv[i] == cols - rows + static_cast<unsigned>(i)) --i;
        if (i < 0) return;
        ++piv[i];
        for (unsigned t = static_cast<unsigned>(i) + 1; t < rows; ++t) piv[t] = piv[t - 1] + 1;
    }
}

/// Point set of a subspace. Combinations whose first nonzero coefficient is
/// 1 are already normalized because the basis is in reduced echelon form.
inline PointSet subspace_points(const ProjectiveSpace& S, const LinearSubspace& sub) {
    const Field& F = S.field();
    const unsigned q = F.q(), rows = sub.dim + 1, cols = S.dim() + 1;
    PointSet out(S.size());
    Coords v(cols);
    for (unsigned lead = 0; lead < rows; ++lead) {
        const std::uint64_t count = ipow(q, rows - 1 - lead);
        for (std::uint64_t idx = 0; idx < count; ++idx) {
            v = sub.basis[lead];
            std::uint64_t t = idx;
            for (unsigned i = rows - 1; i > lead; --i, t /= q) {
                const Elem lam = static_cast<Elem>(t % q);
                if (!lam) continue;
                for (unsigned c = 0; c < cols; ++c) v[c] = F.add(v[c], F.mul(lam, sub.basis[i][c]));
            }
            out.insert(S.index_of(v));
        }
    }
    return out;
}

/// Projective space plus its hyperplanes and their point sets, built once
/// and shared read-only by the geometric predicates.
class Geometry {
public:
    Geometry(Field F, unsigned n) : space_(std::move(F), n) {
        const Field& f = space_.field();
        hyperplanes_ = enumerate_hyperplanes(f, n);
        for (const auto& h : hyperplanes_) {
            PointSet s(space_.size());
            for (std::size_t i = 0; i < space_.size(); ++i)
                if (h.contains(f, space_.point(i))) s.insert(i);
            hyperplane_points_.push_back(std::move(s));
        }
    }

    const ProjectiveSpace& space() const { return space_; }
    const Field& field() const { return space_.field(); }
    unsigned dim() const { return space_.dim(); }
    const std::vector<Hyperplane>& hyperplanes() const { return hyperplanes_; }
    const PointSet& hyperplane_points(std::size_t i) const { return hyperplane_points_[i]; }

private:
    ProjectiveSpace space_;
    std::vector<Hyperplane> hyperplanes_;
    std::vector<PointSet> hyperplane_points_;
};

/// First hyperplane (in frozen order) disjoint from S.
inline std::optional<Hyperplane> find_avoiding_hyperplane(const Geometry& G, const PointSet& S) {
    for (std::size_t i = 0; i < G.hyperplanes().size(); ++i)
        if (!G.hyperplane_points(i).intersects(S)) return G.hyperplanes()[i];
    return std::nullopt;
}

/// First dimension-r subspace (canonical order) disjoint from S.
inline std::optional<LinearSubspace> find_avoiding_subspace(const Geometry& G, const PointSet& S, unsigned r) {
    if (r + 1 > G.dim()) throw std::invalid_argument("subspace dimension must be at most n-1");
    std::optional<LinearSubspace> found;
    for_each_subspace(G.field(), G.dim(), r, [&](const LinearSubspace& sub) {
        if (subspace_points(G.space(), sub).intersects(S)) return true;
        found = sub;
        return false;
    });
    return found;
}

/// Largest r in [0, n-1] admitting a dimension-r subspace disjoint from S.
inline std::optional<unsigned> largest_avoiding_subspace_dim(const Geometry& G, const PointSet& S) {
    for (unsigned r = G.dim(); r-- > 0;)
        if (find_avoiding_subspace(G, S, r)) return r;
    return std::nullopt;
}

inline std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    std::uint64_t r = 1;
    for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

/// Finds at most `max_planes` hyperplanes whose union is exactly Z. Only
/// hyperplanes contained in Z are candidates. Throws BudgetExceeded when the
/// number of candidate subsets exceeds `budget`.
inline std::optional<std::vector<Hyperplane>> is_hyperplane_union(const Geometry& G, const PointSet& Z, unsigned max_planes,
                                                                  std::uint64_t budget = std::uint64_t{1} << 24) {
    if (max_planes < 1) throw std::invalid_argument("max_planes must be at least 1");
    std::vector<std::size_t> cand;
    for (std::size_t i = 0; i < G.hyperplanes().size(); ++i)
        if (G.hyperplane_points(i).is_subset_of(Z)) cand.push_back(i);

    if (Z.empty()) return std::nullopt;

    std::uint64_t subsets = 0;
    for (unsigned t = 1; t <= max_planes && t <= cand.size(); ++t) {
        subsets += binomial(cand.size(), t);
        if (subsets > budget) throw BudgetExceeded("hyperplane-union search exceeds budget");
    }

    std::vector<std::size_t> chosen;
    std::optional<std::vector<Hyperplane>> result;
    std::function<bool(std::size_t, const PointSet&)> dfs = [&](std::size_t start, const PointSet& covered) -> bool {
        if (covered == Z) {
            std::vector<Hyperplane> hs;
            for (auto i : chosen) hs.push_back(G.hyperplanes()[i]);
            result = std::move(hs);
            return true;
        }
        if (chosen.size() == max_planes) return false;
        for (std::size_t j = start; j < cand.size(); ++j) {
            chosen.push_back(cand[j]);
            PointSet next = covered;
            next |= G.hyperplane_points(cand[j]);
            if (dfs(j + 1, next)) return true;
            chosen.pop_back();
        }
        return false;
    };
    dfs(0, PointSet(Z.universe()));
    return result;
}

}  // namespace prmw
