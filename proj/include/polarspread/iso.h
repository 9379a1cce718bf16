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

#ifndef POLARSPREAD_ISO_H
#define POLARSPREAD_ISO_H

#include <cstddef>
#include <vector>

#include "polarspread/spread.h"

namespace polarspread {

/// All matrices M with M J M^T = J, found by filtering every 2N x 2N matrix
/// over F_d. Only W_3(2) is in range (2^16 candidates); anything larger
/// throws ScaleExceeded. Vectors act on the left: v -> v M.
std::vector<FMatrix> symplectic_group(const PolarSpace &space);

/// Permutation of generator indices induced by each group element.
std::vector<std::vector<std::size_t>> generator_permutations(const PolarSpace &space,
                                                              const std::vector<FMatrix> &group);

struct IsoClassification {
    std::size_t group_order;
    /// One representative per orbit: the lexicographically least image of
    /// the first spread met in that orbit. Ordered by first appearance.
    std::vector<PartialSpread> representatives;
    /// For each input spread, the index of its orbit.
    std::vector<std::size_t> orbit_of;
};

IsoClassification classify_iso(const PolarSpace &space, const std::vector<PartialSpread> &spreads);

}  // namespace polarspread

#endif
