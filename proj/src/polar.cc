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

#include "polarspread/polar.h"

#include <algorithm>

#include "polarspread/error.h"

namespace polarspread {

std::uint64_t PolarSpace::expected_generator_count(unsigned d, unsigned n) {
    std::uint64_t count = 1;
    for (unsigned i = 1; i <= n; i++) {
        count *= ipow(d, i) + 1;
    }
    return count;
}

std::uint64_t PolarSpace::expected_point_count(unsigned d, unsigned n) {
    return (ipow(d, 2 * n) - 1) / (d - 1);
}

namespace {

std::uint64_t vector_key(const FVector &v, unsigned d) {
    std::uint64_t key = 0;
    for (auto c : v.coords) {
        key = key * d + c;
    }
    return key;
}

}  // namespace

PolarSpace::PolarSpace(unsigned d, unsigned n) : field_(d, n), n_(n) {
    if (n < 1) {
        throw Error(ErrorKind::InvalidArgument, "polar space rank must be at least 1");
    }
    std::uint64_t total = ipow(d, 2 * n);
    if (total > kMaxAmbientVectors) {
        throw Error(ErrorKind::ScaleExceeded, "ambient space F_" + std::to_string(d) + "^" + std::to_string(2 * n) +
                                                  " is too large to index");
    }

    std::vector<FVector> form_rows(2 * n, FVector(2 * n));
    for (unsigned i = 0; i < n; i++) {
        form_rows[2 * i][2 * i + 1] = 1;
        form_rows[2 * i + 1][2 * i] = field_.neg(1);
    }
    form_matrix_ = FMatrix(std::move(form_rows), 2 * n, field_);

    for (std::uint64_t code = 1; code < total; code++) {
        FVector v(2 * n);
        std::uint64_t c = code;
        for (std::size_t i = 2 * n; i-- > 0;) {
            v[i] = static_cast<Residue>(c % d);
            c /= d;
        }
        if (v[v.leading_index()] != 1) {
            continue;
        }
        points_.push_back(PPoint{points_.size(), std::move(v)});
        point_keys_.push_back(code);
    }
    points_per_generator_ = static_cast<std::size_t>((ipow(d, n) - 1) / (d - 1));
}

std::size_t PolarSpace::point_index(const FVector &v) const {
    if (v.size() != dim()) {
        throw Error(ErrorKind::DimensionMismatch, "point vector must have length 2N");
    }
    if (v.is_zero()) {
        throw Error(ErrorKind::InvalidArgument, "the zero vector is not a point");
    }
    auto key = vector_key(normalized(v, field_), d());
    auto it = std::lower_bound(point_keys_.begin(), point_keys_.end(), key);
    return static_cast<std::size_t>(it - point_keys_.begin());
}

Residue PolarSpace::form(const FVector &u, const FVector &v) const {
    if (u.size() != dim() || v.size() != dim()) {
        throw Error(ErrorKind::DimensionMismatch, "form arguments must have length 2N");
    }
    unsigned acc = 0;
    unsigned p = d();
    for (unsigned i = 0; i < n_; i++) {
        acc += static_cast<unsigned>(u[2 * i]) * v[2 * i + 1];
        acc += (p - u[2 * i + 1]) % p * v[2 * i];
    }
    return static_cast<Residue>(acc % p);
}

bool PolarSpace::is_totally_isotropic(const FMatrix &s) const {
    for (std::size_t i = 0; i < s.num_rows(); i++) {
        for (std::size_t j = i + 1; j < s.num_rows(); j++) {
            if (form(s.row(i), s.row(j)) != 0) {
                return false;
            }
        }
    }
    return true;
}

std::vector<std::size_t> PolarSpace::points_of(const FMatrix &s) const {
    std::vector<std::size_t> out;
    for (const auto &v : projective_points(rref(s, field_), field_)) {
        out.push_back(point_index(v));
    }
    std::sort(out.begin(), out.end());
    return out;
}

PointSet PolarSpace::mask_of(const FMatrix &s) const {
    PointSet mask(points_.size());
    for (auto i : points_of(s)) {
        mask.set(i);
    }
    return mask;
}

namespace {

std::vector<Residue> flatten(const FMatrix &m) {
    std::vector<Residue> key;
    for (const auto &r : m.rows()) {
        key.insert(key.end(), r.coords.begin(), r.coords.end());
    }
    return key;
}

}  // namespace

void PolarSpace::build_generators() const {
    std::uint64_t expected = expected_generator_count(d(), n_);
    if (expected > kMaxGenerators) {
        throw Error(ErrorKind::ScaleExceeded, "W_" + std::to_string(2 * n_ - 1) + "(" + std::to_string(d()) + ") has " +
                                                  std::to_string(expected) + " generators");
    }

    // Backtracking over rref bases: row i is a normalized point whose pivot
    // lies right of row i-1's pivot, which every earlier row vanishes at, and
    // which is orthogonal to every earlier row.
    std::vector<std::vector<std::size_t>> by_pivot(dim());
    for (const auto &p : points_) {
        by_pivot[p.vec.leading_index()].push_back(p.index);
    }
    std::vector<FMatrix> bases;
    std::vector<std::size_t> chosen;
    auto recurse = [&](auto &&self, std::size_t min_pivot) -> void {
        if (chosen.size() == n_) {
            std::vector<FVector> rows;
            for (auto i : chosen) {
                rows.push_back(points_[i].vec);
            }
            bases.emplace_back(std::move(rows), dim(), field_);
            return;
        }
        for (std::size_t pivot = min_pivot; pivot < dim(); pivot++) {
            bool column_clear = true;
            for (auto i : chosen) {
                if (points_[i].vec[pivot] != 0) {
                    column_clear = false;
                    break;
                }
            }
            if (!column_clear) {
                continue;
            }
            for (auto cand : by_pivot[pivot]) {
                bool ok = true;
                for (auto i : chosen) {
                    if (form(points_[i].vec, points_[cand].vec) != 0) {
                        ok = false;
                        break;
                    }
                }
                if (!ok) {
                    continue;
                }
                chosen.push_back(cand);
                self(self, pivot + 1);
                chosen.pop_back();
            }
        }
    };
    recurse(recurse, 0);
    std::sort(bases.begin(), bases.end());

    if (bases.size() != expected) {
        throw Error(ErrorKind::StructureViolation, "generator enumeration found " + std::to_string(bases.size()) +
                                                       " generators, expected " + std::to_string(expected));
    }

    generators_.reserve(bases.size());
    generators_on_point_.assign(points_.size(), {});
    for (auto &b : bases) {
        Generator g{generators_.size(), std::move(b), {}, PointSet(points_.size())};
        g.points = points_of(g.basis);
        for (auto p : g.points) {
            g.point_mask.set(p);
            generators_on_point_[p].push_back(g.index);
        }
        generator_lookup_.emplace(flatten(g.basis), g.index);
        generators_.push_back(std::move(g));
    }
}

const std::vector<Generator> &PolarSpace::generators() const {
    std::call_once(generators_once_, [this] { build_generators(); });
    return generators_;
}

const std::vector<std::vector<std::size_t>> &PolarSpace::generators_on_point() const {
    generators();
    return generators_on_point_;
}

std::optional<std::size_t> PolarSpace::find_generator(const FMatrix &basis) const {
    generators();
    auto canon = rref(basis, field_);
    if (canon.rank() != n_) {
        return std::nullopt;
    }
    auto it = generator_lookup_.find(flatten(canon));
    if (it == generator_lookup_.end()) {
        return std::nullopt;
    }
    return it->second;
}

Residue symp_form(const FVector &u, const FVector &v, const PolarSpace &space) {
    return space.form(u, v);
}

const std::vector<Generator> &enumerate_generators(const PolarSpace &space) {
    return space.generators();
}

FMatrix perp(const FMatrix &s, const PolarSpace &space) {
    if (s.cols() != space.dim()) {
        throw Error(ErrorKind::DimensionMismatch, "subspace is not in the ambient space");
    }
    const auto &f = space.field();
    std::vector<FVector> constraints;
    for (const auto &w : s.rows()) {
        FVector c(space.dim());
        for (unsigned i = 0; i < space.rank(); i++) {
            c[2 * i] = w[2 * i + 1];
            c[2 * i + 1] = f.neg(w[2 * i]);
        }
        constraints.push_back(std::move(c));
    }
    return null_space(FMatrix(std::move(constraints), space.dim(), f), f);
}

static FMatrix point_matrix(const FVector &v, const PolarSpace &space) {
    return FMatrix(std::vector<FVector>{v}, space.dim(), space.field());
}

const Generator &nearest_generator(const PPoint &x, const Generator &g, const PolarSpace &space) {
    if (g.point_mask.test(x.index)) {
        throw Error(ErrorKind::PointOnGenerator, "point " + x.vec.str() + " lies on the generator");
    }
    const auto &f = space.field();
    FMatrix xm = point_matrix(x.vec, space);
    FMatrix shadow = subspace_meet(perp(xm, space), g.basis, f);
    if (shadow.rank() + 1 != space.rank()) {
        throw Error(ErrorKind::StructureViolation, "x^perp meets the generator in the wrong dimension");
    }
    auto idx = space.find_generator(subspace_sum(xm, shadow, f));
    if (!idx) {
        throw Error(ErrorKind::StructureViolation, "span(x, x^perp meet g) is not a generator");
    }
    return space.generator(*idx);
}

std::vector<FMatrix> hyperplane_map(const Generator &g, const Generator &g2, const PolarSpace &space) {
    if (g.point_mask.intersects(g2.point_mask)) {
        throw Error(ErrorKind::NotDisjoint, "generators " + std::to_string(g.index) + " and " +
                                                std::to_string(g2.index) + " meet");
    }
    const auto &f = space.field();
    std::vector<FMatrix> images;
    for (auto p : g.points) {
        FMatrix h = subspace_meet(perp(point_matrix(space.point(p).vec, space), space), g2.basis, f);
        if (h.rank() + 1 != space.rank()) {
            throw Error(ErrorKind::StructureViolation, "image is not a hyperplane");
        }
        images.push_back(std::move(h));
    }
    auto sorted = images;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
        throw Error(ErrorKind::StructureViolation, "hyperplane map is not injective");
    }
    return images;
}

std::vector<std::size_t> generators_through(const FMatrix &s, const PolarSpace &space) {
    const auto &f = space.field();
    if (s.cols() != space.dim()) {
        throw Error(ErrorKind::DimensionMismatch, "subspace is not in the ambient space");
    }
    if (s.rank() + 1 != space.rank()) {
        throw Error(ErrorKind::WrongRank, "expected a rank-" + std::to_string(space.rank() - 1) + " subspace, got rank " +
                                              std::to_string(s.rank()));
    }
    FMatrix base = rref(s, f);
    if (!space.is_totally_isotropic(base)) {
        throw Error(ErrorKind::NotIsotropic, "subspace is not totally isotropic");
    }
    std::vector<std::size_t> found;
    for (const auto &p : projective_points(perp(base, space), f)) {
        if (in_row_space(base, p, f)) {
            continue;
        }
        auto idx = space.find_generator(subspace_sum(base, point_matrix(p, space), f));
        if (!idx) {
            throw Error(ErrorKind::StructureViolation, "extension of an isotropic subspace is not a generator");
        }
        found.push_back(*idx);
    }
    std::sort(found.begin(), found.end());
    found.erase(std::unique(found.begin(), found.end()), found.end());
    return found;
}

std::vector<std::size_t> common_transversals(std::span<const std::size_t> gens, const PolarSpace &space) {
    if (space.rank() != 2) {
        throw Error(ErrorKind::NotRankTwo, "transversals are defined here for W_3(d) only");
    }
    const auto &all = space.generators();
    for (std::size_t i = 0; i < gens.size(); i++) {
        for (std::size_t j = i + 1; j < gens.size(); j++) {
            if (all.at(gens[i]).point_mask.intersects(all.at(gens[j]).point_mask)) {
                throw Error(ErrorKind::NotDisjoint, "input lines are not pairwise disjoint");
            }
        }
    }
    std::vector<std::size_t> out;
    for (const auto &line : all) {
        if (std::find(gens.begin(), gens.end(), line.index) != gens.end()) {
            continue;
        }
        bool meets_all = std::all_of(gens.begin(), gens.end(),
                                     [&](std::size_t g) { return line.point_mask.intersects(all[g].point_mask); });
        if (meets_all) {
            out.push_back(line.index);
        }
    }
    return out;
}

std::size_t double_perp_size(const Generator &v, const Generator &w, const PolarSpace &space) {
    std::vector<std::size_t> pair{v.index, w.index};
    auto first = common_transversals(pair, space);
    return common_transversals(first, space).size();
}

}  // namespace polarspread
