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

#ifndef POLARSPREAD_POINT_SET_H
#define POLARSPREAD_POINT_SET_H

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace polarspread {

/// Bitset over point indices, in 64-bit blocks sized from the point count.
class PointSet {
   public:
    PointSet() = default;
    explicit PointSet(std::size_t num_points) : num_points_(num_points), words_((num_points + 63) / 64, 0) {
    }
    static PointSet full(std::size_t num_points);

    std::size_t universe() const noexcept {
        return num_points_;
    }
    const std::vector<std::uint64_t> &words() const noexcept {
        return words_;
    }

    void set(std::size_t i) {
        words_[i >> 6] |= std::uint64_t{1} << (i & 63);
    }
    void reset(std::size_t i) {
        words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63));
    }
    bool test(std::size_t i) const {
        return (words_[i >> 6] >> (i & 63)) & 1;
    }
    std::size_t count() const noexcept {
        std::size_t c = 0;
        for (auto w : words_) {
            c += static_cast<std::size_t>(std::popcount(w));
        }
        return c;
    }
    bool none() const noexcept;
    bool intersects(const PointSet &other) const noexcept;
    bool is_subset_of(const PointSet &other) const noexcept;
    std::size_t intersection_count(const PointSet &other) const noexcept;

    PointSet &operator|=(const PointSet &other);
    PointSet &operator&=(const PointSet &other);
    PointSet &subtract(const PointSet &other);

    std::vector<std::size_t> indices() const;

    bool operator==(const PointSet &other) const = default;

   private:
    std::size_t num_points_ = 0;
    std::vector<std::uint64_t> words_;
};

PointSet operator|(PointSet a, const PointSet &b);
PointSet operator&(PointSet a, const PointSet &b);

}  // namespace polarspread

#endif
