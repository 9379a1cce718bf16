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

#include "polarspread/search.h"

#include <set>

#include "gtest/gtest.h"

#include "polarspread/error.h"
#include "polarspread/iso.h"

using namespace polarspread;

namespace {

// Plain DFS over all partial spreads with increasing member indices,
// keeping the complete ones. No pruning.
void naive(const PolarSpace &space, std::vector<std::size_t> &chosen, PointSet &cover, std::size_t next,
           std::vector<std::vector<std::size_t>> &out) {
    bool extended = false;
    for (const auto &g : space.generators()) {
        if (!g.point_mask.intersects(cover)) {
            extended = true;
            if (g.index >= next) {
                chosen.push_back(g.index);
                PointSet saved = cover;
                cover |= g.point_mask;
                naive(space, chosen, cover, g.index + 1, out);
                cover = saved;
                chosen.pop_back();
            }
        }
    }
    if (!extended) {
        out.push_back(chosen);
    }
}

}  // namespace

TEST(search, exhaustive_matches_naive_enumeration) {
    PolarSpace space(2, 2);
    auto r = search_maximal(space);
    std::vector<std::vector<std::size_t>> expected;
    std::vector<std::size_t> chosen;
    PointSet cover(space.num_points());
    naive(space, chosen, cover, 0, expected);
    std::set<std::vector<std::size_t>> got;
    for (const auto &ps : r.found) {
        got.insert(ps.members());
    }
    EXPECT_EQ(got, std::set<std::vector<std::size_t>>(expected.begin(), expected.end()));
    EXPECT_EQ(r.found.size(), expected.size());
}

TEST(search, w32_sizes) {
    PolarSpace space(2, 2);
    auto r = search_maximal(space);
    auto hist = size_histogram(r);
    // Only sizes 3 (complete non-spreads) and 5 (spreads).
    ASSERT_EQ(hist.size(), 2u);
    EXPECT_EQ(hist[0].first, 3u);
    EXPECT_EQ(hist[1].first, 5u);
    EXPECT_EQ(hist[1].second, 6u);
    for (const auto &ps : r.found) {
        EXPECT_TRUE(is_complete(ps).complete);
    }
}

TEST(search, galois_bound_w33) {
    PolarSpace space(3, 2);
    SearchOptions opts;
    opts.mode = SearchMode::FirstOfSize;
    opts.target = 8;
    auto r = search_maximal(space, opts);
    ASSERT_EQ(r.found.size(), 1u);
    EXPECT_EQ(r.found[0].size(), 8u);
    EXPECT_TRUE(is_complete(r.found[0]).complete);
    opts.target = 9;
    EXPECT_TRUE(search_maximal(space, opts).found.empty());
}

TEST(search, no_complete_four_in_w32) {
    PolarSpace space(2, 2);
    SearchOptions opts;
    opts.mode = SearchMode::FirstOfSize;
    opts.target = 4;
    opts.exclude_spreads = true;
    EXPECT_TRUE(search_maximal(space, opts).found.empty());
}

TEST(search, scale_limit) {
    PolarSpace space(5, 2);
    try {
        search_maximal(space);
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.kind(), ErrorKind::ScaleExceeded);
    }
}

TEST(iso, group_and_orbits) {
    PolarSpace space(2, 2);
    auto group = symplectic_group(space);
    EXPECT_EQ(group.size(), 720u);
    auto perms = generator_permutations(space, group);
    std::size_t identities = 0;
    for (const auto &p : perms) {
        std::set<std::size_t> image(p.begin(), p.end());
        EXPECT_EQ(image.size(), 15u);
        bool id = true;
        for (std::size_t i = 0; i < p.size(); i++) {
            id &= p[i] == i;
        }
        identities += id;
    }
    EXPECT_EQ(identities, 1u);

    SearchOptions opts;
    opts.exclude_spreads = true;
    auto triples = search_maximal(space, opts).found;
    auto cls = classify_iso(space, triples);
    EXPECT_EQ(cls.group_order, 720u);
    EXPECT_EQ(cls.representatives.size(), 1u);

    auto spreads = search_maximal(space).found;
    std::vector<PartialSpread> only_spreads;
    for (const auto &ps : spreads) {
        if (ps.is_spread()) {
            only_spreads.push_back(ps);
        }
    }
    EXPECT_EQ(classify_iso(space, only_spreads).representatives.size(), 1u);
}

TEST(iso, scale_limit) {
    PolarSpace space(3, 2);
    EXPECT_THROW(symplectic_group(space), Error);
}
