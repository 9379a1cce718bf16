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

#include "polarspread/constructions.h"

#include <set>

#include "gtest/gtest.h"

#include "polarspread/error.h"

using namespace polarspread;

TEST(tu, sizes_and_completion) {
    for (unsigned d : {2u, 3u, 5u}) {
        PolarSpace space(d, 2);
        auto s = construct_symplectic_spread(space);
        std::set<std::size_t> sizes;
        for (const auto &u : space.generators()) {
            if (s.contains(u.index)) {
                continue;
            }
            auto tu = construct_TU(s, u);
            EXPECT_EQ(tu.size(), d * d - d + 1);
            auto done = complete_TU(tu);
            EXPECT_LE(done.extension_count, 1u);
            EXPECT_TRUE(done.cert.complete);
            EXPECT_FALSE(done.spread.is_spread());
            sizes.insert(done.spread.size());
            if (d == 2) {
                EXPECT_EQ(done.spread.size(), 3u);
            }
        }
        for (auto size : sizes) {
            EXPECT_TRUE(size == d * d - d + 1 || size == d * d - d + 2) << size;
        }
    }
}

TEST(tu, rejects_spread_member) {
    PolarSpace space(3, 2);
    auto s = construct_symplectic_spread(space);
    try {
        construct_TU(s, space.generator(s.members()[0]));
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.kind(), ErrorKind::GeneratorInSpread);
    }
}

TEST(partner, unique_and_involutive) {
    for (unsigned d : {3u, 5u}) {
        PolarSpace space(d, 2);
        auto s = construct_symplectic_spread(space);
        std::size_t checked = 0;
        for (const auto &x : space.generators()) {
            if (s.contains(x.index)) {
                continue;
            }
            const auto &y = pair_partner(s, x);
            EXPECT_NE(y.index, x.index);
            EXPECT_FALSE(s.contains(y.index));
            EXPECT_EQ(s.members_meeting(x), s.members_meeting(y));
            EXPECT_EQ(pair_partner(s, y).index, x.index);
            if (d == 5 && ++checked == 20) {
                break;
            }
        }
    }
}

TEST(partner, pairs_structure) {
    for (unsigned d : {3u, 5u}) {
        PolarSpace space(d, 2);
        auto s = construct_symplectic_spread(space);
        const auto &m = s.members();
        for (std::size_t j = 1; j < m.size(); j += 3) {
            auto pairs = partner_pairs(s, m[0], m[j]);
            ASSERT_EQ(pairs.size(), (d + 1) / 2);
            for (const auto &p : pairs) {
                EXPECT_EQ(p.block.size(), d + 1);
                EXPECT_LT(p.first, p.second);
            }
            for (std::size_t a = 0; a < pairs.size(); a++) {
                for (std::size_t b = a + 1; b < pairs.size(); b++) {
                    std::vector<std::size_t> common;
                    std::set_intersection(pairs[a].block.begin(), pairs[a].block.end(), pairs[b].block.begin(),
                                          pairs[b].block.end(), std::back_inserter(common));
                    std::vector<std::size_t> lm{std::min(m[0], m[j]), std::max(m[0], m[j])};
                    EXPECT_EQ(common, lm);
                }
            }
        }
    }
}

TEST(partner, even_order_has_no_partner) {
    PolarSpace space(2, 2);
    auto s = construct_symplectic_spread(space);
    for (const auto &x : space.generators()) {
        if (!s.contains(x.index)) {
            EXPECT_THROW(pair_partner(s, x), Error);
            break;
        }
    }
}

TEST(sr, sizes_complete) {
    struct Case {
        unsigned q, k;
    };
    for (auto c : {Case{3, 0}, Case{5, 0}, Case{5, 1}, Case{7, 2}}) {
        PolarSpace space(c.q, 2);
        auto s = construct_symplectic_spread(space);
        auto sr = construct_SR(s, s.members()[0], s.members()[1], c.k);
        // (q^2 + 1) - |union of k + 1 blocks| + 2(k + 1), blocks sharing only L, M.
        std::size_t expected = c.q * c.q + 1 - (2 + (c.k + 1) * (c.q - 1)) + 2 * (c.k + 1);
        EXPECT_EQ(sr.size(), expected);
        EXPECT_EQ(sr_size(c.q, c.k), expected);
        EXPECT_TRUE(is_complete(sr).complete);
        EXPECT_FALSE(sr.is_spread());
    }
}

TEST(sr, bad_k) {
    PolarSpace space(5, 2);
    auto s = construct_symplectic_spread(space);
    try {
        construct_SR(s, s.members()[0], s.members()[1], 2);
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.kind(), ErrorKind::BadK);
    }
}

TEST(uset, odd_order) {
    for (auto [d, n] : {std::pair{3u, 2u}, std::pair{5u, 2u}}) {
        PolarSpace space(d, n);
        auto s = construct_symplectic_spread(space);
        auto u = find_U_set(s);
        ASSERT_TRUE(u);
        EXPECT_TRUE(u->partition_free);
        EXPECT_FALSE(u->partition_witness);
        const auto &chi = space.generator(u->carrier);
        PointSet region(space.num_points());
        for (auto m : u->members) {
            EXPECT_TRUE(space.generator(m).point_mask.intersects(chi.point_mask));
            region |= space.generator(m).point_mask;
        }
        EXPECT_TRUE(chi.point_mask.is_subset_of(region));
        EXPECT_FALSE(find_partition(space, region, u->carrier));

        auto r = unextendible_from_Uset(s, *u);
        EXPECT_TRUE(r.cert.complete);
        EXPECT_FALSE(r.completed.is_spread());
        EXPECT_LT(r.completed.size(), s.size());
    }
}

TEST(uset, rank_three_binary_no_extra_coverage) {
    PolarSpace space(2, 3);
    auto s = construct_symplectic_spread(space);
    auto u = find_U_set(s);
    ASSERT_TRUE(u);
    auto r = unextendible_from_Uset(s, *u);
    EXPECT_TRUE(r.base_cert.complete);
    EXPECT_TRUE(r.added.empty());
    EXPECT_EQ(r.completed.size(), 5u);
    EXPECT_TRUE(r.cert.complete);
    EXPECT_FALSE(r.completed.is_spread());
}

TEST(uset, rejects_spread_member_carrier) {
    PolarSpace space(3, 2);
    auto s = construct_symplectic_spread(space);
    EXPECT_THROW(construct_U_set(s, space.generator(s.members()[0])), Error);
}

TEST(find_partition, spread_partitions_everything) {
    PolarSpace space(3, 2);
    auto s = construct_symplectic_spread(space);
    auto cover = find_partition(space, space.full_mask(), s.members()[0]);
    ASSERT_TRUE(cover);
    PointSet seen(space.num_points());
    for (auto g : *cover) {
        EXPECT_FALSE(space.generator(g).point_mask.intersects(seen));
        seen |= space.generator(g).point_mask;
    }
    EXPECT_EQ(seen, space.full_mask());
}

TEST(repartition, opposite_regulus) {
    PolarSpace space(2, 2);
    auto s = construct_symplectic_spread(space);
    std::vector<std::size_t> three(s.members().begin(), s.members().begin() + 3);
    auto covered = covered_generators(PartialSpread(space, three));
    ASSERT_EQ(covered.size(), 1u);
    auto triple = s.without(three).with(covered[0]);
    ASSERT_TRUE(is_complete(triple).complete);

    auto opposite = repartition_triple(triple);
    EXPECT_EQ(opposite.size(), 3u);
    EXPECT_EQ(opposite.coverage(), triple.coverage());
    for (auto a : opposite.members()) {
        EXPECT_FALSE(triple.contains(a));
        for (auto b : triple.members()) {
            EXPECT_EQ(space.generator(a).point_mask.intersection_count(space.generator(b).point_mask), 1u);
        }
    }
    EXPECT_EQ(repartition_triple(opposite), triple);
    EXPECT_THROW(repartition_triple(s), Error);
}
