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

#include "polarspread/point_set.h"

namespace polarspread {

PointSet PointSet::full(std::size_t num_points) {
    PointSet s(num_points);
    for (std::size_t i = 0; i < num_points; i++) {
        s.set(i);
    }
    return s;
}

bool PointSet::none() const noexcept {
    for (auto w : words_) {
        if (w) {
            return false;
        }
    }
    return true;
}

bool PointSet::intersects(const PointSet &other) const noexcept {
    for (std::size_t i = 0; i < words_.size(); i++) {
        if (words_[i] & other.words_[i]) {
            return true;
        }
    }
    return false;
}

bool PointSet::is_subset_of(const PointSet &other) const noexcept {
    for (std::size_t i = 0; i < words_.size(); i++) {
        if (words_[i] & ~other.words_[i]) {
            return false;
        }
    }
    return true;
}

std::size_t PointSet::intersection_count(const PointSet &other) const noexcept {
    std::size_t c = 0;
    for (std::size_t i = 0; i < words_.size(); i++) {
        c += static_cast<std::size_t>(std::popcount(words_[i] & other.words_[i]));
    }
    return c;
}

PointSet &PointSet::operator|=(const PointSet &other) {
    for (std::size_t i = 0; i < words_.size(); i++) {
        words_[i] |= other.words_[i];
    }
    return *this;
}

PointSet &PointSet::operator&=(const PointSet &other) {
    for (std::size_t i = 0; i < words_.size(); i++) {
        words_[i] &= other.words_[i];
    }
    return *this;
}

PointSet &PointSet::subtract(const PointSet &other) {
    for (std::size_t i = 0; i < words_.size(); i++) {
        words_[i] &= ~other.words_[i];
    }
    return *this;
}

std::vector<std::size_t> PointSet::indices() const {
    std::vector<std::size_t> out;
    for (std::size_t w = 0; w < words_.size(); w++) {
        auto bits = words_[w];
        while (bits) {
            out.push_back(w * 64 + static_cast<std::size_t>(std::countr_zero(bits)));
            bits &= bits - 1;
        }
    }
    return out;
}

PointSet operator|(PointSet a, const PointSet &b) {
    a |= b;
    return a;
}

PointSet operator&(PointSet a, const PointSet &b) {
    a &= b;
    return a;
}

}  // namespace polarspread
