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

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>

#include "polarspread/error.h"

namespace polarspread {

namespace {

class Searcher {
   public:
    Searcher(const PolarSpace &space, const SearchOptions &options)
        : space_(space), options_(options), words_((space.num_points() + 63) / 64) {
        const auto &gens = space.generators();
        num_gens_ = gens.size();
        masks_.resize(num_gens_ * words_);
        for (const auto &g : gens) {
            std::copy(g.point_mask.words().begin(), g.point_mask.words().end(), masks_.begin() + g.index * words_);
        }
        max_size_ = static_cast<std::size_t>(ipow(space.d(), space.rank()) + 1);
        coverage_.assign((max_size_ + 1) * words_, 0);
    }

    SearchResult run() {
        recurse(0, 0);
        return std::move(result_);
    }

   private:
    const std::uint64_t *mask(std::size_t g) const {
        return masks_.data() + g * words_;
    }
    std::uint64_t *cover(std::size_t depth) {
        return coverage_.data() + depth * words_;
    }
    bool disjoint(const std::uint64_t *a, const std::uint64_t *b) const {
        for (std::size_t w = 0; w < words_; w++) {
            if (a[w] & b[w]) {
                return false;
            }
        }
        return true;
    }
    std::size_t uncovered(const std::uint64_t *c) const {
        return space_.num_points() - static_cast<std::size_t>(std::transform_reduce(
                                         c, c + words_, std::size_t{0}, std::plus<>(),
                                         [](std::uint64_t w) { return static_cast<std::size_t>(std::popcount(w)); }));
    }

    // Returns true to stop the whole search.
    bool recurse(std::size_t depth, std::size_t next) {
        result_.nodes++;
        const std::uint64_t *cov = cover(depth);
        std::vector<std::size_t> candidates;
        std::vector<std::size_t> skipped;
        for (std::size_t g = 0; g < num_gens_; g++) {
            if (!disjoint(mask(g), cov)) {
                continue;
            }
            (g >= next ? candidates : skipped).push_back(g);
        }
        if (candidates.empty() && skipped.empty()) {
            return record(depth);
        }
        if (options_.mode == SearchMode::FirstOfSize) {
            if (depth >= options_.target) {
                return false;
            }
            std::size_t room = uncovered(cov) / space_.points_per_generator();
            if (depth + std::min(room, candidates.size()) < options_.target) {
                return false;
            }
        }
        if (!skipped.empty()) {
            std::vector<std::uint64_t> reach(words_, 0);
            for (auto c : candidates) {
                for (std::size_t w = 0; w < words_; w++) {
                    reach[w] |= mask(c)[w];
                }
            }
            for (auto s : skipped) {
                if (disjoint(mask(s), reach.data())) {
                    return false;
                }
            }
        }
        for (auto c : candidates) {
            std::uint64_t *child = cover(depth + 1);
            for (std::size_t w = 0; w < words_; w++) {
                child[w] = cov[w] | mask(c)[w];
            }
            chosen_.push_back(c);
            bool stop = recurse(depth + 1, c + 1);
            chosen_.pop_back();
            if (stop) {
                return true;
            }
        }
        return false;
    }

    bool record(std::size_t depth) {
        bool is_spread = depth == max_size_;
        if (options_.exclude_spreads && is_spread) {
            return false;
        }
        if (options_.mode == SearchMode::FirstOfSize && depth != options_.target) {
            return false;
        }
        result_.found.emplace_back(space_, chosen_);
        return options_.mode == SearchMode::FirstOfSize;
    }

    const PolarSpace &space_;
    SearchOptions options_;
    std::size_t words_;
    std::size_t num_gens_ = 0;
    std::size_t max_size_ = 0;
    std::vector<std::uint64_t> masks_;
    std::vector<std::uint64_t> coverage_;
    std::vector<std::size_t> chosen_;
    SearchResult result_;
};

}  // namespace

SearchResult search_maximal(const PolarSpace &space, const SearchOptions &options) {
    bool small = (space.rank() == 2 && (space.d() == 2 || space.d() == 3)) || (space.rank() == 3 && space.d() == 2);
    if (options.mode == SearchMode::Exhaustive && !small) {
        throw Error(ErrorKind::ScaleExceeded, "exhaustive search is limited to W_3(2), W_3(3), W_5(2)");
    }
    return Searcher(space, options).run();
}

std::vector<std::pair<std::size_t, std::size_t>> size_histogram(const SearchResult &result) {
    std::map<std::size_t, std::size_t> counts;
    for (const auto &ps : result.found) {
        counts[ps.size()]++;
    }
    return {counts.begin(), counts.end()};
}

}  // namespace polarspread
