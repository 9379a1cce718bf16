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

#ifndef POLARSPREAD_CONSTRUCTIONS_H
#define POLARSPREAD_CONSTRUCTIONS_H

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "polarspread/spread.h"

namespace polarspread {

/// Regular spread by field reduction. F_{d^N}^2 carries the alternating form
/// Tr(x1 y2 - x2 y1); its d^N + 1 one-dimensional F_{d^N}-subspaces are
/// totally isotropic rank-N F_d-subspaces partitioning the points. A
/// symplectic basis change moves them into canonical coordinates.
PartialSpread construct_symplectic_spread(const PolarSpace &space);

/// The change of basis used by construct_symplectic_spread: row k is the
/// k-th canonical basis vector written in field-reduction coordinates.
FMatrix field_reduction_symplectic_basis(const FieldSpec &field);

/// T(U): remove the members of spread s meeting u, then add u.
PartialSpread construct_TU(const PartialSpread &s, const Generator &u);

struct TUCompletion {
    PartialSpread spread;
    CompletenessCert cert;
    /// Number of generators disjoint from T(U) before completion; the
    /// construction guarantees at most one.
    std::size_t extension_count;
    std::optional<std::size_t> added;
};

TUCompletion complete_TU(const PartialSpread &tu);

/// The unique line Y != x of W_3(d) meeting exactly the members of s that x
/// meets. Requires a regular spread and odd d.
const Generator &pair_partner(const PartialSpread &s, const Generator &x);

struct PartnerPair {
    std::size_t first;
    std::size_t second;
    /// Spread members meeting both lines of the pair, ascending.
    std::vector<std::size_t> block;
};

/// {L, M}^perp grouped into partner pairs, pairs ordered by smaller index.
/// Validates that pairing is a fixed-point-free involution and that distinct
/// blocks intersect exactly in {L, M}.
std::vector<PartnerPair> partner_pairs(const PartialSpread &s, std::size_t l_idx, std::size_t m_idx);

/// S_R: for the first k + 1 partner pairs, remove their blocks from s and add
/// both lines of each pair. Requires odd d, N = 2 and 0 <= k <= (d - 3)/2.
PartialSpread construct_SR(const PartialSpread &s, std::size_t l_idx, std::size_t m_idx, unsigned k);

/// Number of members of construct_SR(s, L, M, k) for a spread of W_3(q):
/// (q^2 + 1) - (2 + (k + 1)(q - 1)) + 2(k + 1).
std::size_t sr_size(unsigned q, unsigned k);

struct USet {
    std::vector<std::size_t> members;
    std::size_t carrier;
    /// The spread member meeting the carrier in an (N-2)-space that was
    /// swapped out, and the generator that replaced it.
    std::size_t alpha;
    std::size_t beta;
    /// Number of spread members meeting the carrier, measured.
    std::size_t spread_members_meeting_carrier;
    /// Outcome of the exhaustive partition search over the members' union.
    bool partition_free;
    std::optional<std::vector<std::size_t>> partition_witness;
};

/// Builds R_chi \ {alpha} + {beta}. chi must lie outside s and meet some
/// member in an (N-2)-space; alpha is the lowest-index such member and beta
/// the lowest-index generator through chi meet alpha, other than chi and
/// alpha, disjoint from the rest of R_chi.
USet construct_U_set(const PartialSpread &s, const Generator &chi);

/// Exact cover of `region` by pairwise disjoint generators, one of which
/// is `required`. Returns the lexicographically first cover found.
std::optional<std::vector<std::size_t>> find_partition(const PolarSpace &space, const PointSet &region,
                                                       std::size_t required);

struct UnextendibleResult {
    /// s minus the members meeting the carrier, plus the carrier.
    PartialSpread base;
    CompletenessCert base_cert;
    /// base extended by lowest-index witnesses until complete.
    PartialSpread completed;
    CompletenessCert cert;
    std::vector<std::size_t> added;
};

UnextendibleResult unextendible_from_Uset(const PartialSpread &s, const USet &u);

/// U-set on the lowest-index carrier outside s that yields a partition-free
/// one. When no carrier does (always the case for d = 2), the U-set of the
/// lowest-index carrier admitting the construction is returned with
/// partition_free unset.
std::optional<USet> find_U_set(const PartialSpread &s);

/// The opposite regulus of a complete triple of W_3(2).
PartialSpread repartition_triple(const PartialSpread &ps);

}  // namespace polarspread

#endif
