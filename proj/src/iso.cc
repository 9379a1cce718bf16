// Copyright 2026 The polarspread Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "polarspread/iso.h"

#include <algorithm>
#include <map>

#include "polarspread/error.h"

namespace polarspread {

std::vector<FMatrix> symplectic_group(const PolarSpace &space) {
    std::size_t n = space.dim();
    std::uint64_t candidates = ipow(space.d(), static_cast<unsigned>(n * n));
    if (space.d() != 2 || space.rank() != 2) {
        throw Error(ErrorKind::ScaleExceeded, "symplectic group enumeration is limited to W_3(2)");
    }
    const auto &f = space.field();
    std::vector<FMatrix> group;
    for (std::uint64_t code = 0; code < candidates; code++) {
        std::vector<FVector> rows(n, FVector(n));
        std::uint64_t c = code;
        for (std::size_t i = 0; i < n; i++) {
            for (std::size_t j = 0; j < n; j++) {
                rows[i][j] = static_cast<Residue>(c % space.d());
                c /= space.d();
            }
        }
        // M J M^T = J is F(row_i, row_j) = J_ij.
        bool preserves = true;
        for (std::size_t i = 0; i < n && preserves; i++) {
            for (std::size_t j = 0; j < n; j++) {
                if (space.form(rows[i], rows[j]) != space.form_matrix().row(i)[j]) {
                    preserves = false;
                    break;
                }
            }
        }
        if (preserves) {
            group.emplace_back(std::move(rows), n, f);
        }
    }
    return group;
}

std::vector<std::vector<std::size_t>> generator_permutations(const PolarSpace &space,
                                                              const std::vector<FMatrix> &group) {
    const auto &f = space.field();
    std::vector<std::vector<std::size_t>> perms;
    perms.reserve(group.size());
    for (const auto &m : group) {
        std::vector<std::size_t> perm;
        for (const auto &g : space.generators()) {
            auto idx = space.find_generator(mat_mul(g.basis, m, f));
            if (!idx) {
                throw Error(ErrorKind::StructureViolation, "group element does not preserve generators");
            }
            perm.push_back(*idx);
        }
        perms.push_back(std::move(perm));
    }
    return perms;
}

IsoClassification classify_iso(const PolarSpace &space, const std::vector<PartialSpread> &spreads) {
    auto group = symplectic_group(space);
    auto perms = generator_permutations(space, group);
    IsoClassification out{group.size(), {}, {}};
    std::map<std::vector<std::size_t>, std::size_t> orbit_index;
    for (const auto &ps : spreads) {
        std::vector<std::size_t> best;
        for (const auto &perm : perms) {
            std::vector<std::size_t> image;
            for (auto m : ps.members()) {
                image.push_back(perm[m]);
            }
            std::sort(image.begin(), image.end());
            if (best.empty() || image < best) {
                best = std::move(image);
            }
        }
        auto [it, inserted] = orbit_index.emplace(best, out.representatives.size());
        if (inserted) {
            out.representatives.emplace_back(space, best);
        }
        out.orbit_of.push_back(it->second);
    }
    return out;
}

}  // namespace polarspread
