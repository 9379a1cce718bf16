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
#include <numeric>

#include "gtest/gtest.h"

#include "polarspread/constructions.h"
#include "polarspread/error.h"

using namespace polarspread;

namespace {

// Completeness by brute force: any generator meeting no member?
bool brute_complete(const PartialSpread &ps) {
    const auto &space = ps.space();
    for (const auto &g : space.generators()) {
        bool disjoint = true;
        for (auto m : ps.members()) {
            if (m == g.index) {
                disjoint = false;
                break;
            }
            for (auto p : g.points) {
                if (space.generator(m).point_mask.test(p)) {
                    disjoint = false;
                }
            }
        }
        if (disjoint) {
            return false;
        }
    }
    return true;
}

std::vector<std::vector<std::size_t>> subsets(const std::vector<std::size_t> &items, std::size_t k) {
    std::vector<std::vector<std::size_t>> out;
    std::vector<bool> pick(items.size(), false);
    std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(k), true);
    do {
        std::vector<std::size_t> s;
        for (std::size_t i = 0; i < items.size(); i++) {
            if (pick[i]) {
                s.push_back(items[i]);
            }
        }
        out.push_back(s);
    } while (std::prev_permutation(pick.begin(), pick.end()));
    return out;
}

}  // namespace

TEST(partial_spread, rejects_meeting_members) {
    PolarSpace space(2, 2);
    const auto &g = space.generator(0);
    std::size_t meeting = 0;
    for (const auto &h : space.generators()) {
        if (h.index != g.index && h.point_mask.intersects(g.point_mask)) {
            meeting = h.index;
            break;
        }
    }
    try {
        PartialSpread(space, {0, meeting});
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.kind(), ErrorKind::NotDisjoint);
    }
}

TEST(partial_spread, members_sorted_and_coverage) {
    PolarSpace space(3, 2);
    auto s = construct_symplectic_spread(space);
    std::vector<std::size_t> reversed(s.members().rbegin(), s.members().rend());
    PartialSpread again(space, reversed);
    EXPECT_EQ(again, s);
    EXPECT_TRUE(std::is_sorted(again.members().begin(), again.members().end()));
    EXPECT_EQ(s.coverage(), space.full_mask());
    EXPECT_TRUE(s.is_spread());
    EXPECT_FALSE(s.without(std::vector<std::size_t>{s.members()[0]}).is_spread());
}

TEST(completeness, examples) {
    PolarSpace space(2, 2);
    auto s = construct_symplectic_spread(space);
    EXPECT_TRUE(is_complete(s).complete);
    EXPECT_FALSE(is_complete(s).witness);

    auto two = s.without(std::vector<std::size_t>{s.members()[2], s.members()[3], s.members()[4]});
    auto cert = is_complete(two);
    EXPECT_FALSE(cert.complete);
    ASSERT_TRUE(cert.witness);
    EXPECT_FALSE(space.generator(*cert.witness).point_mask.intersects(two.coverage()));
    EXPECT_EQ(two.coverage().count(), 6u);
    EXPECT_EQ(*cert.witness, extension_candidates(two).front());
}

TEST(completeness, matches_brute_force) {
    for (auto [d, n] : {std::pair{2u, 2u}, std::pair{3u, 2u}}) {
        PolarSpace space(d, n);
        auto s = construct_symplectic_spread(space);
        for (std::size_t k = 1; k <= s.size(); k++) {
            for (const auto &sub : subsets(s.members(), k)) {
                PartialSpread ps(space, sub);
                EXPECT_EQ(is_complete(ps).complete, brute_complete(ps));
            }
            if (d == 3 && k == 3) {
                break;
            }
        }
    }
}

TEST(covered_generators, spread_triples) {
    PolarSpace space(2, 2);
    auto s = construct_symplectic_spread(space);
    for (const auto &triple : subsets(s.members(), 3)) {
        PartialSpread sub(space, triple);
        auto covered = covered_generators(sub);
        ASSERT_EQ(covered.size(), 1u);
        auto rest = s.without(triple).with(covered[0]);
        EXPECT_EQ(rest.size(), 3u);
        EXPECT_TRUE(is_complete(rest).complete);
    }
    PartialSpread single(space, {s.members()[0]});
    EXPECT_TRUE(covered_generators(single).empty());
}

TEST(covered_generators, rank_three_five_subsets) {
    PolarSpace space(2, 3);
    auto s = construct_symplectic_spread(space);
    ASSERT_EQ(s.size(), 9u);
    std::set<std::size_t> seen;
    for (const auto &sub : subsets(s.members(), 5)) {
        auto covered = covered_generators(PartialSpread(space, sub));
        ASSERT_EQ(covered.size(), 1u);
        seen.insert(covered[0]);
        auto rest = s.without(sub).with(covered[0]);
        EXPECT_EQ(rest.size(), 5u);
        EXPECT_TRUE(is_complete(rest).complete);
    }
    EXPECT_EQ(seen.size(), 126u);
}

TEST(spread_construction, field_reduction) {
    struct Case {
        unsigned d, n;
        std::size_t size;
    };
    for (auto c : {Case{2, 2, 5}, Case{3, 2, 10}, Case{5, 2, 26}, Case{2, 3, 9}, Case{3, 3, 28}, Case{2, 4, 17}}) {
        PolarSpace space(c.d, c.n);
        auto s = construct_symplectic_spread(space);
        EXPECT_EQ(s.size(), c.size);
        EXPECT_TRUE(s.is_spread());
    }
}

TEST(spread_construction, symplectic_basis_change) {
    for (auto [d, n] : {std::pair{2u, 2u}, std::pair{3u, 2u}, std::pair{2u, 3u}, std::pair{5u, 2u}}) {
        PolarSpace space(d, n);
        const auto &f = space.field();
        auto b = field_reduction_symplectic_basis(f);
        EXPECT_EQ(b.rank(), 2 * n);
        auto inv = inverse(b, f);
        // Canonical coordinates of the new basis rows are the unit vectors.
        for (std::size_t i = 0; i < 2 * n; i++) {
            FVector e(2 * n);
            e[i] = 1;
            EXPECT_EQ(vec_mat(b.row(i), inv, f), e);
        }
    }
}

TEST(regularity, field_reduction_spreads_are_regular) {
    for (unsigned d : {2u, 3u, 5u}) {
        PolarSpace space(d, 2);
        EXPECT_TRUE(check_regularity(construct_symplectic_spread(space)));
    }
    PolarSpace w52(2, 3);
    EXPECT_TRUE(check_regularity(construct_symplectic_spread(w52)));
}

TEST(regularity, ambient_transversal_count) {
    PolarSpace space(3, 2);
    auto s = construct_symplectic_spread(space);
    const auto &m = s.members();
    auto lines = ambient_transversals(space.generator(m[0]).basis, space.generator(m[1]).basis,
                                      space.generator(m[2]).basis, space);
    EXPECT_EQ(lines.size(), 4u);
}

TEST(regularity, regulus_switch_breaks_regularity) {
    // Replace a regulus of the regular spread of PG(3,3) by its opposite
    // regulus (the Hall spread). The opposite lines are not all symplectic,
    // so the check runs on raw subspaces.
    PolarSpace space(3, 2);
    const auto &f = space.field();
    auto s = construct_symplectic_spread(space);
    std::vector<FMatrix> members;
    for (auto m : s.members()) {
        members.push_back(space.generator(m).basis);
    }
    auto regulus_lines = ambient_transversals(members[0], members[1], members[2], space);
    ASSERT_EQ(regulus_lines.size(), 4u);
    // The regulus through members 0, 1, 2: spread members meeting every transversal.
    std::vector<std::size_t> regulus;
    for (std::size_t i = 0; i < members.size(); i++) {
        bool all = true;
        for (const auto &t : regulus_lines) {
            all &= subspace_meet(members[i], t, f).rank() > 0;
        }
        if (all) {
            regulus.push_back(i);
        }
    }
    ASSERT_EQ(regulus.size(), 4u);
    std::vector<FMatrix> switched;
    for (std::size_t i = 0; i < members.size(); i++) {
        if (std::find(regulus.begin(), regulus.end(), i) == regulus.end()) {
            switched.push_back(members[i]);
        }
    }
    for (const auto &t : regulus_lines) {
        switched.push_back(rref(t, f));
    }
    EXPECT_TRUE(is_regular_spread(members, space));
    EXPECT_FALSE(is_regular_spread(switched, space));
}

TEST(regularity, requires_a_spread) {
    PolarSpace space(3, 2);
    auto s = construct_symplectic_spread(space);
    try {
        check_regularity(s.without(std::vector<std::size_t>{s.members()[0]}));
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.kind(), ErrorKind::NotASpread);
    }
}

TEST(spread_invariants, off_spread_line_meets_d_plus_one) {
    for (unsigned d : {2u, 3u}) {
        PolarSpace space(d, 2);
        auto s = construct_symplectic_spread(space);
        for (const auto &g : space.generators()) {
            if (!s.contains(g.index)) {
                EXPECT_EQ(s.members_meeting(g).size(), d + 1);
            }
        }
    }
}
