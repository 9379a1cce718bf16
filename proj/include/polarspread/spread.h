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

#ifndef POLARSPREAD_SPREAD_H
#define POLARSPREAD_SPREAD_H

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "polarspread/polar.h"

namespace polarspread {

/// A set of pairwise disjoint generators, stored as sorted catalog indices
/// with the union of their point masks cached. The referenced space must
/// outlive the spread.
class PartialSpread {
   public:
    explicit PartialSpread(const PolarSpace &space);
    /// Throws NotDisjoint if two members share a point.
    PartialSpread(const PolarSpace &space, std::vector<std::size_t> members);

    const PolarSpace &space() const noexcept {
        return *space_;
    }
    const std::vector<std::size_t> &members() const noexcept {
        return members_;
    }
    const PointSet &coverage() const noexcept {
        return coverage_;
    }
    std::size_t size() const noexcept {
        return members_.size();
    }
    bool contains(std::size_t gen_index) const;
    /// True iff the members partition every point of the space.
    bool is_spread() const;

    PartialSpread with(std::size_t gen_index) const;
    PartialSpread without(std::span<const std::size_t> gen_indices) const;
    /// Members meeting the given generator.
    std::vector<std::size_t> members_meeting(const Generator &g) const;

    bool operator==(const PartialSpread &other) const {
        return space_ == other.space_ && members_ == other.members_;
    }

   private:
    const PolarSpace *space_;
    std::vector<std::size_t> members_;
    PointSet coverage_;
};

/// complete == !witness. A witness is the lowest-index generator disjoint from
/// every member.
struct CompletenessCert {
    bool complete;
    std::optional<std::size_t> witness;
};

CompletenessCert is_complete(const PartialSpread &ps);

/// Every generator disjoint from all members, ascending.
std::vector<std::size_t> extension_candidates(const PartialSpread &ps);

/// Generators outside ps whose points all lie in ps's coverage.
std::vector<std::size_t> covered_generators(const PartialSpread &ps);

/// Regularity of a spread of PG(2N-1, d) given as arbitrary rank-N
/// subspaces: for every three members, the lines of the ambient projective
/// space meeting all three must be met by exactly d - 2 further members.
/// Throws NotASpread if the members do not partition the points.
bool is_regular_spread(std::span<const FMatrix> members, const PolarSpace &space);

bool check_regularity(const PartialSpread &s);

/// Ambient lines of PG(2N-1, d) meeting each of three pairwise disjoint
/// rank-N subspaces. There are (d^N - 1)/(d - 1) of them.
std::vector<FMatrix> ambient_transversals(const FMatrix &a, const FMatrix &b, const FMatrix &c, const PolarSpace &space);

}  // namespace polarspread

#endif
