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
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

#include "space.hpp"

// Closed-form minimum and next-to-minimal weights of affine (generalized)
// and projective Reed-Muller codes over F_q.
//
// Affine codes RM(n, d) use d = a(q-1) + b, 0 < b <= q-1. Projective codes
// PRM(n, d) use d - 1 = k(q-1) + l, 0 <= k <= n-1, 0 < l <= q-1. All
// arithmetic is exact on unsigned 64-bit integers.

namespace prmw {

struct AffineParams {
    unsigned a = 0;
    unsigned b = 0;
    bool clamped = false;  // d was above n(q-1) and was lowered to it
};

struct ProjParams {
    unsigned k = 0;
    unsigned l = 0;
    bool top_of_range = false;  // d = n(q-1)+1, one past the usual code range
};

enum class Status { exact, upper_bound_only, unknown };

inline const char* to_string(Status s) {
    switch (s) {
        case Status::exact: return "exact";
        case Status::upper_bound_only: return "upper_bound_only";
        case Status::unknown: return "unknown";
    }
    return "?";
}

/// Source tags attached to projective predictions.
namespace source {
inline constexpr const char* top_order = "top-order";                 // k = n-1, value q-l+1
inline constexpr const char* binary = "binary-table";                 // q = 2
inline constexpr const char* rm_equality = "rm-equality";             // equals W2 of RM(n, d-1)
inline constexpr const char* quadric = "quadric-construction";        // (q^2-1) q^(n-k-2), l = 1, k < n-2
inline constexpr const char* plane_conic = "plane-conic";             // n = d = 2, value q^2
inline constexpr const char* open = "open";                           // not determined; bounds only
}  // namespace source

struct WeightPrediction {
    std::uint64_t value = 0;  // exact weight, or the upper bound when not exact
    Status status = Status::exact;
    std::string source;
    std::optional<std::pair<std::uint64_t, std::uint64_t>> bounds;  // (lower, upper), inclusive
};

inline void check_qn(unsigned q, unsigned n) {
    if (q < 2) throw std::invalid_argument("q must be at least 2");
    if (n < 1) throw std::invalid_argument("n must be at least 1");
}

inline AffineParams decompose_affine(unsigned q, unsigned n, int d) {
    check_qn(q, n);
    if (d <= 0) throw std::invalid_argument("affine order d must be positive");
    AffineParams p;
    auto dd = static_cast<unsigned>(d);
    if (dd > n * (q - 1)) {
        dd = n * (q - 1);
        p.clamped = true;
    }
    p.a = (dd - 1) / (q - 1);
    p.b = dd - p.a * (q - 1);
    return p;
}

inline ProjParams decompose_projective(unsigned q, unsigned n, int d) {
    check_qn(q, n);
    if (d < 2 || static_cast<unsigned>(d) > n * (q - 1) + 1)
        throw std::invalid_argument("projective degree must satisfy 2 <= d <= n(q-1)+1");
    ProjParams p;
    const auto dm1 = static_cast<unsigned>(d) - 1;
    p.k = (dm1 - 1) / (q - 1);
    p.l = dm1 - p.k * (q - 1);
    p.top_of_range = static_cast<unsigned>(d) == n * (q - 1) + 1;
    return p;
}

/// Minimum distance of RM(n, d): (q-b) q^(n-a-1).
inline std::uint64_t w1_rm(unsigned q, unsigned n, int d) {
    const auto [a, b, clamped] = decompose_affine(q, n, d);
    return (q - b) * ipow(q, n - a - 1);
}

/// The c term of the next-to-minimal weight W1 + c q^(n-a-2), for a < n-1.
/// Overlapping cases of the published list are resolved in this order.
inline std::uint64_t w2_rm_c(unsigned q, unsigned n, unsigned a, unsigned b) {
    if (b > 1) return b - 1;
    if (a == 0) return q;
    // b = 1, 0 < a <= n-2
    if (q >= 4) return q;
    if (q == 3) return q - 1;
    return a == n - 2 ? q : q - 1;
}

/// Next-to-minimal weight of RM(n, d). Orders above n(q-1) are clamped
/// (the code is the full space: W1 = 1, W2 = 2).
inline std::uint64_t w2_rm(unsigned q, unsigned n, int d) {
    const auto [a, b, clamped] = decompose_affine(q, n, d);
    const std::uint64_t w1 = (q - b) * ipow(q, n - a - 1);
    if (a == n - 1) return w1 + 1;  // c = q against q^(-1)
    return w1 + w2_rm_c(q, n, a, b) * ipow(q, n - a - 2);
}

/// Minimum distance of PRM(n, d), equal to that of RM(n, d-1).
inline std::uint64_t w1_prm(unsigned q, unsigned n, int d) {
    decompose_projective(q, n, d);
    return w1_rm(q, n, d - 1);
}

/// Next-to-minimal weight of PRM(n, d) where known; bounds otherwise.
inline WeightPrediction w2_prm(unsigned q, unsigned n, int d) {
    const auto [k, l, top] = decompose_projective(q, n, d);
    auto exact = [](std::uint64_t v, const char* src) { return WeightPrediction{v, Status::exact, src, std::nullopt}; };

    if (k == n - 1) return exact(q - l + 1, source::top_order);

    if (q == 2) {
        // l = 1 always
        if (k == n - 2) return exact(4, source::binary);
        return exact(3 * ipow(2, n - k - 2), source::binary);
    }

    const std::uint64_t rm_prev = w2_rm(q, n, d - 1);
    if (l == 1) {
        if (n == 2) return exact(std::uint64_t{q} * q, source::plane_conic);  // k = 0
        if (q == 3 && k >= 1) return exact(8 * ipow(3, n - k - 2), source::rm_equality);
        if (k + 2 < n) return exact((std::uint64_t{q} * q - 1) * ipow(q, n - k - 2), source::quadric);
        // q >= 4, k = n-2, n >= 3: open
    } else if (2 * l <= q + 1) {
        return exact(std::uint64_t{q - 1} * (q - l + 1) * ipow(q, n - k - 2), source::rm_equality);
    }

    const std::uint64_t lower = w1_prm(q, n, d) + 1;
    return WeightPrediction{rm_prev, Status::unknown, source::open, std::make_pair(lower, rm_prev)};
}

/// |S| < (1 + 1/q)(q-l) q^(n-k-1): below this a support misses some hyperplane.
inline bool below_hyperplane_threshold(unsigned q, unsigned n, int d, std::uint64_t support) {
    const auto [k, l, top] = decompose_projective(q, n, d);
    return support * q < std::uint64_t{q + 1} * (q - l) * ipow(q, n - k - 1);
}

/// |S| <= (q-l+1) q^(n-k-1): up to this a support misses a subspace of dimension >= k.
inline bool below_subspace_threshold(unsigned q, unsigned n, int d, std::uint64_t support) {
    const auto [k, l, top] = decompose_projective(q, n, d);
    return support <= std::uint64_t{q - l + 1} * ipow(q, n - k - 1);
}

/// Label of the published table row that (q, n, d) falls in. Table rows are
/// classes over (n, k, l); the label spells out the row's conditions.
inline std::string table_row_class(unsigned q, unsigned n, int d) {
    const auto [k, l, top] = decompose_projective(q, n, d);
    if (q == 2) {
        if (k == n - 1) return "n>=2, k=n-1, l=1";
        if (k == n - 2) return "n>=2, k=n-2, l=1";
        if (k == 0) return "n>=3, k=0, l=1";
        return "n>=4, 1<=k<n-2, l=1";
    }
    if (q == 3) {
        if (k == n - 1) return "n>=1, k=n-1, l=1,2";
        if (l == 2) return "n>=2, 0<=k<=n-2, l=2";
        if (n == 2) return "n=2, k=0, l=1";
        if (k == 0) return "n>=3, k=0, l=1";
        return "n>=3, 1<=k<=n-2, l=1";
    }
    if (k == n - 1) return "n>=1, k=n-1, 1<=l<=q-1";
    if (l == 1) {
        if (n == 2) return "n=2, k=0, l=1";
        if (k + 2 < n) return "n>=3, k<n-2, l=1";
        return "n>=3, k=n-2, l=1";
    }
    if (2 * l <= q + 1) return "n>=2, k<=n-2, 1<l<=(q+1)/2";
    return "n>=2, k<=n-2, (q+1)/2<l<=q-1";
}

}  // namespace prmw
