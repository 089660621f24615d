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

// Prints predicted and enumerated low weights of a few small projective
// codes, then the quadric codeword that beats every product of linear forms.

#include <cstdio>
#include <string>

#include "prmw/codes.hpp"
#include "prmw/weights.hpp"
#include "prmw/witnesses.hpp"

int main() {
    using namespace prmw;
    std::printf("%-4s %-3s %-3s %-8s %-8s %-8s %-8s %s\n", "q", "n", "d", "W1", "W1 enum", "W2", "W2 enum", "source");
    for (unsigned q : {2u, 3u, 4u})
        for (unsigned n : {1u, 2u})
            for (unsigned d = 2; d <= n * (q - 1) + 1; ++d) {
                const auto p = w2_prm(q, n, d);
                std::string e1 = "-", e2 = "-";
                try {
                    const auto r = exhaustive_low_weights(make_code(Family::PRM, field_of_order(q), n, d), {.budget = 1u << 20});
                    e1 = std::to_string(*r.w1);
                    e2 = std::to_string(*r.w2);
                } catch (const BudgetExceeded&) {
                }
                const auto w2 = p.status == Status::exact ? std::to_string(p.value)
                                                           : std::to_string(p.bounds->first) + ".." + std::to_string(p.bounds->second);
                std::printf("%-4u %-3u %-3u %-8llu %-8s %-8s %-8s %s\n", q, n, d, static_cast<unsigned long long>(w1_prm(q, n, d)),
                            e1.c_str(), w2.c_str(), e2.c_str(), p.source.c_str());
            }

    std::printf("\nquadric witnesses in P^3, d = 2:\n");
    for (unsigned q : {2u, 3u, 4u, 5u}) {
        const auto F = field_of_order(q);
        const auto w = quadric_witness(F, 3, 0);
        const auto c = chart_support_counts(make_code(Family::PRM, F, 3, 2), w.poly);
        std::printf("  q=%u  %s  weight %llu = %llu + %llu, affine bound %llu\n", q, to_string(w.poly).c_str(),
                    static_cast<unsigned long long>(w.claimed_weight), static_cast<unsigned long long>(c.at_infinity),
                    static_cast<unsigned long long>(c.affine), static_cast<unsigned long long>(w2_rm(q, 3, 1)));
    }
}
