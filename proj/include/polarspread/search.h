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

#ifndef POLARSPREAD_SEARCH_H
#define POLARSPREAD_SEARCH_H

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "polarspread/spread.h"

namespace polarspread {

enum class SearchMode { Exhaustive, FirstOfSize };

struct SearchOptions {
    SearchMode mode = SearchMode::Exhaustive;
    /// Required size in FirstOfSize mode.
    std::size_t target = 0;
    /// Skip results that are spreads.
    bool exclude_spreads = false;
};

struct SearchResult {
    /// Complete partial spreads in lexicographic order of member lists.
    std::vector<PartialSpread> found;
    std::uint64_t nodes = 0;
};

/// Canonical backtracking over partial spreads with strictly increasing
/// member indices. A branch is abandoned when a skipped generator is disjoint
/// from the current coverage and no remaining candidate can block it.
/// Exhaustive mode is limited to W_3(2), W_3(3) and W_5(2).
SearchResult search_maximal(const PolarSpace &space, const SearchOptions &options = {});

/// Sizes of all complete partial spreads found, with multiplicities.
std::vector<std::pair<std::size_t, std::size_t>> size_histogram(const SearchResult &result);

}  // namespace polarspread

#endif
