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

#ifndef POLARSPREAD_POLAR_H
#define POLARSPREAD_POLAR_H

#include <cstddef>
#include <cstdint>
#include <map>
#include <mutex>
#include <optional>
#include <span>
#include <vector>

#include "polarspread/algebra.h"
#include "polarspread/point_set.h"

namespace polarspread {

struct PPoint {
    std::size_t index;
    FVector vec;
};

/// A maximal totally isotropic subspace: rank-N rref basis plus the indices
/// and bitmask of its (d^N - 1)/(d - 1) points.
struct Generator {
    std::size_t index;
    FMatrix basis;
    std::vector<std::size_t> points;
    PointSet point_mask;
};

/// The symplectic polar space W_{2N-1}(d) with the canonical alternating form
///
///     F(x, y) = sum_i (x_{2i} y_{2i+1} - x_{2i+1} y_{2i}).
///
/// Points are indexed in lexicographic order of their normalized coordinate
/// vectors (first nonzero coordinate equal to 1). Generators are enumerated on
/// first use and indexed in lexicographic order of their rref bases.
///
/// Instances are immutable apart from the guarded one-time generator catalog
/// build, so a single space can be shared between threads.
class PolarSpace {
   public:
    static constexpr std::uint64_t kMaxAmbientVectors = std::uint64_t{1} << 24;
    static constexpr std::uint64_t kMaxGenerators = 100000;

    PolarSpace(unsigned d, unsigned n);
    PolarSpace(const PolarSpace &) = delete;
    PolarSpace &operator=(const PolarSpace &) = delete;

    const FieldSpec &field() const noexcept {
        return field_;
    }
    unsigned d() const noexcept {
        return field_.d();
    }
    /// N, the vector-space dimension of a generator.
    unsigned rank() const noexcept {
        return n_;
    }
    /// 2N, the ambient vector-space dimension.
    unsigned dim() const noexcept {
        return 2 * n_;
    }
    const FMatrix &form_matrix() const noexcept {
        return form_matrix_;
    }

    std::size_t num_points() const noexcept {
        return points_.size();
    }
    const PPoint &point(std::size_t i) const {
        return points_.at(i);
    }
    const std::vector<PPoint> &points() const noexcept {
        return points_;
    }
    /// Index of the projective point spanned by a nonzero vector.
    std::size_t point_index(const FVector &v) const;

    std::size_t points_per_generator() const noexcept {
        return points_per_generator_;
    }
    /// Closed-form generator count prod_{i=1..N} (d^i + 1).
    static std::uint64_t expected_generator_count(unsigned d, unsigned n);
    static std::uint64_t expected_point_count(unsigned d, unsigned n);

    /// The full catalog; throws ScaleExceeded past kMaxGenerators.
    const std::vector<Generator> &generators() const;
    const Generator &generator(std::size_t i) const {
        return generators().at(i);
    }
    std::size_t num_generators() const {
        return generators().size();
    }
    /// Generator indices through each point, ascending.
    const std::vector<std::vector<std::size_t>> &generators_on_point() const;
    /// Catalog index of the generator spanned by basis, if it is one.
    std::optional<std::size_t> find_generator(const FMatrix &basis) const;

    Residue form(const FVector &u, const FVector &v) const;
    bool is_totally_isotropic(const FMatrix &s) const;
    std::vector<std::size_t> points_of(const FMatrix &s) const;
    PointSet mask_of(const FMatrix &s) const;
    PointSet full_mask() const {
        return PointSet::full(points_.size());
    }

   private:
    void build_generators() const;

    FieldSpec field_;
    unsigned n_;
    FMatrix form_matrix_;
    std::vector<PPoint> points_;
    std::vector<std::uint64_t> point_keys_;
    std::size_t points_per_generator_;

    mutable std::once_flag generators_once_;
    mutable std::vector<Generator> generators_;
    mutable std::vector<std::vector<std::size_t>> generators_on_point_;
    mutable std::map<std::vector<Residue>, std::size_t> generator_lookup_;
};

Residue symp_form(const FVector &u, const FVector &v, const PolarSpace &space);

const std::vector<Generator> &enumerate_generators(const PolarSpace &space);

/// rref basis of { v : F(v, w) = 0 for all w in rowspace(s) }.
FMatrix perp(const FMatrix &s, const PolarSpace &space);

/// The unique generator on x meeting g in an (N-2)-space: span(x, x^perp meet g).
const Generator &nearest_generator(const PPoint &x, const Generator &g, const PolarSpace &space);

/// For disjoint g, g2: x -> x^perp meet g2 for each point x of g, in the order
/// of g.points. The images are the hyperplanes of g2, each hit once.
std::vector<FMatrix> hyperplane_map(const Generator &g, const Generator &g2, const PolarSpace &space);

/// The d + 1 generators containing a totally isotropic (N-1)-dim subspace,
/// in catalog order.
std::vector<std::size_t> generators_through(const FMatrix &s, const PolarSpace &space);

/// Lines of W_3(d) meeting every member of a set of pairwise disjoint lines,
/// members themselves excluded. Catalog order.
std::vector<std::size_t> common_transversals(std::span<const std::size_t> gens, const PolarSpace &space);

/// |({V, W}^perp)^perp| for disjoint lines V, W of W_3(d).
std::size_t double_perp_size(const Generator &v, const Generator &w, const PolarSpace &space);

}  // namespace polarspread

#endif
