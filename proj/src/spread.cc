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

#include "polarspread/spread.h"

#include <algorithm>

#include "polarspread/error.h"

namespace polarspread {

PartialSpread::PartialSpread(const PolarSpace &space) : space_(&space), coverage_(space.num_points()) {
}

PartialSpread::PartialSpread(const PolarSpace &space, std::vector<std::size_t> members)
    : space_(&space), members_(std::move(members)), coverage_(space.num_points()) {
    std::sort(members_.begin(), members_.end());
    if (std::adjacent_find(members_.begin(), members_.end()) != members_.end()) {
        throw Error(ErrorKind::InvalidArgument, "duplicate member in partial spread");
    }
    const auto &gens = space.generators();
    for (auto m : members_) {
        if (m >= gens.size()) {
            throw Error(ErrorKind::InvalidArgument, "generator index " + std::to_string(m) + " out of range");
        }
        if (coverage_.intersects(gens[m].point_mask)) {
            throw Error(ErrorKind::NotDisjoint, "generator " + std::to_string(m) + " meets an earlier member");
        }
        coverage_ |= gens[m].point_mask;
    }
}

bool PartialSpread::contains(std::size_t gen_index) const {
    return std::binary_search(members_.begin(), members_.end(), gen_index);
}

bool PartialSpread::is_spread() const {
    return coverage_.count() == space_->num_points();
}

PartialSpread PartialSpread::with(std::size_t gen_index) const {
    auto m = members_;
    m.push_back(gen_index);
    return PartialSpread(*space_, std::move(m));
}

PartialSpread PartialSpread::without(std::span<const std::size_t> gen_indices) const {
    std::vector<std::size_t> m;
    for (auto x : members_) {
        if (std::find(gen_indices.begin(), gen_indices.end(), x) == gen_indices.end()) {
            m.push_back(x);
        }
    }
    return PartialSpread(*space_, std::move(m));
}

std::vector<std::size_t> PartialSpread::members_meeting(const Generator &g) const {
    std::vector<std::size_t> out;
    const auto &gens = space_->generators();
    for (auto m : members_) {
        if (gens[m].point_mask.intersects(g.point_mask)) {
            out.push_back(m);
        }
    }
    return out;
}

CompletenessCert is_complete(const PartialSpread &ps) {
    for (const auto &g : ps.space().generators()) {
        if (!g.point_mask.intersects(ps.coverage())) {
            return {false, g.index};
        }
    }
    return {true, std::nullopt};
}

std::vector<std::size_t> extension_candidates(const PartialSpread &ps) {
    std::vector<std::size_t> out;
    for (const auto &g : ps.space().generators()) {
        if (!g.point_mask.intersects(ps.coverage())) {
            out.push_back(g.index);
        }
    }
    return out;
}

std::vector<std::size_t> covered_generators(const PartialSpread &ps) {
    std::vector<std::size_t> out;
    for (const auto &g : ps.space().generators()) {
        if (!ps.contains(g.index) && g.point_mask.is_subset_of(ps.coverage())) {
            out.push_back(g.index);
        }
    }
    return out;
}

std::vector<FMatrix> ambient_transversals(const FMatrix &a, const FMatrix &b, const FMatrix &c,
                                          const PolarSpace &space) {
    const auto &f = space.field();
    std::size_t n = space.rank();
    FMatrix ab = stack(a, b, f);
    if (a.rank() != n || b.rank() != n || c.rank() != n) {
        throw Error(ErrorKind::WrongRank, "transversal inputs must be rank-N subspaces");
    }
    if (ab.rank() != 2 * n || stack(a, c, f).rank() != 2 * n || stack(b, c, f).rank() != 2 * n) {
        throw Error(ErrorKind::NotDisjoint, "transversal inputs must be pairwise disjoint");
    }
    FMatrix ab_inv = inverse(ab, f);
    std::vector<FMatrix> lines;
    for (const auto &cv : projective_points(rref(c, f), f)) {
        // cv = x + y with x in a, y in b; the transversal through cv is span(x, cv).
        FVector coeffs = vec_mat(cv, ab_inv, f);
        FVector x(space.dim());
        for (std::size_t i = 0; i < n; i++) {
            x = vec_add(x, vec_scale(a.row(i), coeffs[i], f), f);
        }
        lines.push_back(rref(FMatrix(std::vector<FVector>{x, cv}, space.dim(), f), f));
    }
    return lines;
}

bool is_regular_spread(std::span<const FMatrix> members, const PolarSpace &space) {
    const auto &f = space.field();
    std::size_t n = space.rank();
    PointSet seen(space.num_points());
    std::size_t total = 0;
    for (const auto &m : members) {
        if (m.cols() != space.dim() || m.rank() != n) {
            throw Error(ErrorKind::NotASpread, "spread members must be rank-N subspaces");
        }
        auto mask = space.mask_of(m);
        total += mask.count();
        seen |= mask;
    }
    if (total != space.num_points() || seen.count() != space.num_points()) {
        throw Error(ErrorKind::NotASpread, "members do not partition the point set");
    }
    std::size_t required = space.d() - 2;
    for (std::size_t i = 0; i < members.size(); i++) {
        for (std::size_t j = i + 1; j < members.size(); j++) {
            for (std::size_t k = j + 1; k < members.size(); k++) {
                auto lines = ambient_transversals(members[i], members[j], members[k], space);
                std::size_t further = 0;
                for (std::size_t m = 0; m < members.size(); m++) {
                    if (m == i || m == j || m == k) {
                        continue;
                    }
                    bool meets_all = std::all_of(lines.begin(), lines.end(), [&](const FMatrix &line) {
                        return stack(members[m], line, f).rank() < n + 2;
                    });
                    if (meets_all) {
                        further++;
                    }
                }
                if (further != required) {
                    return false;
                }
            }
        }
    }
    return true;
}

bool check_regularity(const PartialSpread &s) {
    if (!s.is_spread()) {
        throw Error(ErrorKind::NotASpread, "regularity is only defined for spreads");
    }
    std::vector<FMatrix> bases;
    for (auto m : s.members()) {
        bases.push_back(s.space().generator(m).basis);
    }
    return is_regular_spread(bases, s.space());
}

}  // namespace polarspread
