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

#include "polarspread/constructions.h"

#include <algorithm>
#include <map>

#include "polarspread/error.h"

namespace polarspread {

namespace {

FVector first_half(const FVector &v, std::size_t n) {
    return FVector(std::vector<Residue>(v.coords.begin(), v.coords.begin() + static_cast<std::ptrdiff_t>(n)));
}

FVector second_half(const FVector &v, std::size_t n) {
    return FVector(std::vector<Residue>(v.coords.begin() + static_cast<std::ptrdiff_t>(n), v.coords.end()));
}

// Tr(x_u y_v - x_v y_u) on F_{d^N}^2 written as length-2N vectors.
Residue trace_form(const FVector &u, const FVector &v, const FieldSpec &f) {
    std::size_t n = f.ext_degree();
    auto xy = ext_mul(first_half(u, n), second_half(v, n), f);
    auto yx = ext_mul(first_half(v, n), second_half(u, n), f);
    return ext_trace(vec_sub(xy, yx, f), f);
}

FVector concat(const FVector &a, const FVector &b) {
    FVector r(a.size() + b.size());
    std::copy(a.coords.begin(), a.coords.end(), r.coords.begin());
    std::copy(b.coords.begin(), b.coords.end(), r.coords.begin() + static_cast<std::ptrdiff_t>(a.size()));
    return r;
}

}  // namespace

FMatrix field_reduction_symplectic_basis(const FieldSpec &field) {
    std::size_t n = field.ext_degree();
    std::vector<FVector> remaining;
    for (std::size_t i = 0; i < 2 * n; i++) {
        FVector e(2 * n);
        e[i] = 1;
        remaining.push_back(std::move(e));
    }
    std::vector<FVector> basis;
    while (basis.size() < 2 * n) {
        auto u_it = std::find_if(remaining.begin(), remaining.end(), [](const FVector &v) { return !v.is_zero(); });
        if (u_it == remaining.end()) {
            throw Error(ErrorKind::StructureViolation, "trace form is degenerate");
        }
        FVector u = *u_it;
        auto w_it = std::find_if(remaining.begin(), remaining.end(),
                                 [&](const FVector &v) { return trace_form(u, v, field) != 0; });
        if (w_it == remaining.end()) {
            throw Error(ErrorKind::StructureViolation, "trace form is degenerate");
        }
        FVector w = vec_scale(*w_it, field.inv(trace_form(u, *w_it, field)), field);
        basis.push_back(u);
        basis.push_back(w);
        // Project everything onto the orthogonal complement of span(u, w).
        for (auto &v : remaining) {
            Residue vw = trace_form(v, w, field);
            Residue vu = trace_form(v, u, field);
            v = vec_add(vec_sub(v, vec_scale(u, vw, field), field), vec_scale(w, vu, field), field);
        }
    }
    return FMatrix(std::move(basis), 2 * n, field);
}

PartialSpread construct_symplectic_spread(const PolarSpace &space) {
    const auto &f = space.field();
    std::size_t n = space.rank();
    FMatrix to_canonical = inverse(field_reduction_symplectic_basis(f), f);

    std::vector<FVector> powers;
    for (std::size_t i = 0; i < n; i++) {
        FVector t(n);
        t[i] = 1;
        powers.push_back(std::move(t));
    }
    std::vector<std::vector<FVector>> elements;
    for (const auto &m : ext_elements(f)) {
        std::vector<FVector> rows;
        for (const auto &t : powers) {
            rows.push_back(concat(t, ext_mul(t, m, f)));
        }
        elements.push_back(std::move(rows));
    }
    {
        std::vector<FVector> rows;
        for (const auto &t : powers) {
            rows.push_back(concat(FVector(n), t));
        }
        elements.push_back(std::move(rows));
    }

    std::vector<std::size_t> members;
    for (auto &rows : elements) {
        for (auto &r : rows) {
            r = vec_mat(r, to_canonical, f);
        }
        auto idx = space.find_generator(FMatrix(std::move(rows), space.dim(), f));
        if (!idx) {
            throw Error(ErrorKind::StructureViolation, "field-reduction element is not a generator");
        }
        members.push_back(*idx);
    }
    PartialSpread s(space, std::move(members));
    if (!s.is_spread()) {
        throw Error(ErrorKind::StructureViolation, "field-reduction construction did not cover every point");
    }
    return s;
}

PartialSpread construct_TU(const PartialSpread &s, const Generator &u) {
    if (s.space().rank() != 2) {
        throw Error(ErrorKind::NotRankTwo, "T(U) is built in W_3(d)");
    }
    if (!s.is_spread()) {
        throw Error(ErrorKind::NotASpread, "T(U) starts from a spread");
    }
    if (s.contains(u.index)) {
        throw Error(ErrorKind::GeneratorInSpread, "U = " + std::to_string(u.index) + " is a spread member");
    }
    auto hit = s.members_meeting(u);
    if (hit.size() != s.space().d() + 1) {
        throw Error(ErrorKind::StructureViolation, "U meets " + std::to_string(hit.size()) + " spread lines");
    }
    return s.without(hit).with(u.index);
}

TUCompletion complete_TU(const PartialSpread &tu) {
    auto candidates = extension_candidates(tu);
    if (candidates.empty()) {
        return TUCompletion{tu, {true, std::nullopt}, 0, std::nullopt};
    }
    auto extended = tu.with(candidates.front());
    return TUCompletion{extended, is_complete(extended), candidates.size(), candidates.front()};
}

const Generator &pair_partner(const PartialSpread &s, const Generator &x) {
    const auto &space = s.space();
    if (space.rank() != 2) {
        throw Error(ErrorKind::NotRankTwo, "partner lines are defined in W_3(d)");
    }
    if (s.contains(x.index)) {
        throw Error(ErrorKind::GeneratorInSpread, "x is a spread member");
    }
    auto meeting = s.members_meeting(x);
    auto across = common_transversals(meeting, space);
    std::vector<std::size_t> others;
    for (auto g : across) {
        if (g != x.index) {
            others.push_back(g);
        }
    }
    if (others.empty()) {
        throw Error(ErrorKind::NoPartner, "no second line meets the members meeting " + std::to_string(x.index));
    }
    if (others.size() > 1) {
        throw Error(ErrorKind::AmbiguousPartner,
                    std::to_string(others.size()) + " candidate partners for " + std::to_string(x.index));
    }
    return space.generator(others.front());
}

std::vector<PartnerPair> partner_pairs(const PartialSpread &s, std::size_t l_idx, std::size_t m_idx) {
    const auto &space = s.space();
    if (!s.contains(l_idx) || !s.contains(m_idx) || l_idx == m_idx) {
        throw Error(ErrorKind::InvalidArgument, "L and M must be distinct spread members");
    }
    std::vector<std::size_t> lm{l_idx, m_idx};
    auto xs = common_transversals(lm, space);
    if (xs.size() != space.d() + 1) {
        throw Error(ErrorKind::StructureViolation, "{L, M}^perp has " + std::to_string(xs.size()) + " lines");
    }
    std::map<std::size_t, std::size_t> partner;
    for (auto x : xs) {
        auto y = pair_partner(s, space.generator(x)).index;
        if (std::find(xs.begin(), xs.end(), y) == xs.end()) {
            throw Error(ErrorKind::StructureViolation, "partner of a line of {L, M}^perp lies outside it");
        }
        partner[x] = y;
    }
    std::vector<PartnerPair> pairs;
    for (auto [x, y] : partner) {
        if (y == x || partner.at(y) != x) {
            throw Error(ErrorKind::StructureViolation, "partner map is not a fixed-point-free involution");
        }
        if (x < y) {
            auto bx = s.members_meeting(space.generator(x));
            auto by = s.members_meeting(space.generator(y));
            if (bx != by) {
                throw Error(ErrorKind::StructureViolation, "partner lines meet different spread members");
            }
            pairs.push_back(PartnerPair{x, y, std::move(bx)});
        }
    }
    for (std::size_t i = 0; i < pairs.size(); i++) {
        for (std::size_t j = i + 1; j < pairs.size(); j++) {
            std::vector<std::size_t> common;
            std::set_intersection(pairs[i].block.begin(), pairs[i].block.end(), pairs[j].block.begin(),
                                  pairs[j].block.end(), std::back_inserter(common));
            std::vector<std::size_t> expected{std::min(l_idx, m_idx), std::max(l_idx, m_idx)};
            if (common != expected) {
                throw Error(ErrorKind::StructureViolation, "distinct blocks do not meet exactly in {L, M}");
            }
        }
    }
    return pairs;
}

std::size_t sr_size(unsigned q, unsigned k) {
    return (q * q + 1) - (2 + (k + 1) * (q - 1)) + 2 * (k + 1);
}

PartialSpread construct_SR(const PartialSpread &s, std::size_t l_idx, std::size_t m_idx, unsigned k) {
    const auto &space = s.space();
    unsigned q = space.d();
    if (space.rank() != 2) {
        throw Error(ErrorKind::NotRankTwo, "S_R is built in W_3(q)");
    }
    if (q % 2 == 0) {
        throw Error(ErrorKind::InvalidArgument, "S_R requires odd order");
    }
    if (k > (q - 3) / 2) {
        throw Error(ErrorKind::BadK, "k = " + std::to_string(k) + " outside [0, " + std::to_string((q - 3) / 2) + "]");
    }
    if (!s.is_spread()) {
        throw Error(ErrorKind::NotASpread, "S_R starts from a spread");
    }
    auto pairs = partner_pairs(s, l_idx, m_idx);
    if (pairs.size() != (q + 1) / 2) {
        throw Error(ErrorKind::StructureViolation, "expected (q + 1)/2 partner pairs");
    }
    std::vector<std::size_t> removed;
    std::vector<std::size_t> added;
    for (unsigned i = 0; i <= k; i++) {
        removed.insert(removed.end(), pairs[i].block.begin(), pairs[i].block.end());
        added.push_back(pairs[i].first);
        added.push_back(pairs[i].second);
    }
    auto result = s.without(removed);
    for (auto a : added) {
        result = result.with(a);
    }
    return result;
}

std::optional<std::vector<std::size_t>> find_partition(const PolarSpace &space, const PointSet &region,
                                                       std::size_t required) {
    const auto &gens = space.generators();
    if (!gens.at(required).point_mask.is_subset_of(region)) {
        return std::nullopt;
    }
    std::vector<std::size_t> inside;
    for (const auto &g : gens) {
        if (g.index != required && g.point_mask.is_subset_of(region)) {
            inside.push_back(g.index);
        }
    }
    std::vector<std::size_t> chosen{required};
    PointSet left = region;
    left.subtract(gens[required].point_mask);

    // Cover the lowest uncovered point first; every branch is a generator on it.
    auto recurse = [&](auto &&self) -> bool {
        if (left.none()) {
            return true;
        }
        std::size_t p = left.indices().front();
        for (auto g : inside) {
            const auto &mask = gens[g].point_mask;
            if (!mask.test(p) || !mask.is_subset_of(left)) {
                continue;
            }
            chosen.push_back(g);
            left.subtract(mask);
            if (self(self)) {
                return true;
            }
            left |= mask;
            chosen.pop_back();
        }
        return false;
    };
    if (!recurse(recurse)) {
        return std::nullopt;
    }
    std::sort(chosen.begin(), chosen.end());
    return chosen;
}

USet construct_U_set(const PartialSpread &s, const Generator &chi) {
    const auto &space = s.space();
    const auto &f = space.field();
    std::size_t n = space.rank();
    if (s.contains(chi.index)) {
        throw Error(ErrorKind::NoSuitableChi, "the carrier is a spread member");
    }
    auto r_chi = s.members_meeting(chi);
    std::optional<std::size_t> alpha;
    FMatrix shared;
    for (auto m : r_chi) {
        auto meet = subspace_meet(space.generator(m).basis, chi.basis, f);
        if (meet.rank() + 1 == n) {
            alpha = m;
            shared = std::move(meet);
            break;
        }
    }
    if (!alpha) {
        throw Error(ErrorKind::NoSuitableChi, "carrier meets no member in an (N-2)-space");
    }
    PointSet rest(space.num_points());
    for (auto m : r_chi) {
        if (m != *alpha) {
            rest |= space.generator(m).point_mask;
        }
    }
    std::optional<std::size_t> beta;
    for (auto g : generators_through(shared, space)) {
        if (g != chi.index && g != *alpha && !space.generator(g).point_mask.intersects(rest)) {
            beta = g;
            break;
        }
    }
    if (!beta) {
        throw Error(ErrorKind::NoBeta, "no generator through chi meet alpha avoids the other members meeting chi");
    }
    USet u;
    u.carrier = chi.index;
    u.alpha = *alpha;
    u.beta = *beta;
    u.spread_members_meeting_carrier = r_chi.size();
    for (auto m : r_chi) {
        if (m != *alpha) {
            u.members.push_back(m);
        }
    }
    u.members.push_back(*beta);
    std::sort(u.members.begin(), u.members.end());

    PointSet region = rest | space.generator(*beta).point_mask;
    if (!chi.point_mask.is_subset_of(region)) {
        throw Error(ErrorKind::StructureViolation, "U-set members do not cover the carrier");
    }
    u.partition_witness = find_partition(space, region, chi.index);
    u.partition_free = !u.partition_witness.has_value();
    return u;
}

UnextendibleResult unextendible_from_Uset(const PartialSpread &s, const USet &u) {
    const auto &chi = s.space().generator(u.carrier);
    auto base = s.without(s.members_meeting(chi)).with(u.carrier);
    auto base_cert = is_complete(base);
    auto completed = base;
    std::vector<std::size_t> added;
    auto cert = base_cert;
    while (!cert.complete) {
        added.push_back(*cert.witness);
        completed = completed.with(*cert.witness);
        cert = is_complete(completed);
    }
    return UnextendibleResult{std::move(base), base_cert, std::move(completed), cert, std::move(added)};
}

std::optional<USet> find_U_set(const PartialSpread &s) {
    const auto &space = s.space();
    std::optional<USet> fallback;
    for (const auto &g : space.generators()) {
        if (s.contains(g.index)) {
            continue;
        }
        try {
            auto u = construct_U_set(s, g);
            if (u.partition_free) {
                return u;
            }
            if (!fallback) {
                fallback = std::move(u);
            }
        } catch (const Error &e) {
            if (e.kind() != ErrorKind::NoSuitableChi && e.kind() != ErrorKind::NoBeta) {
                throw;
            }
        }
    }
    return fallback;
}

PartialSpread repartition_triple(const PartialSpread &ps) {
    const auto &space = ps.space();
    if (space.d() != 2 || space.rank() != 2 || ps.size() != 3 || !is_complete(ps).complete) {
        throw Error(ErrorKind::NotUnextendibleTriple, "expected a complete triple of W_3(2)");
    }
    auto opposite = common_transversals(ps.members(), space);
    if (opposite.size() != 3) {
        throw Error(ErrorKind::NotUnextendibleTriple, "triple is not a regulus");
    }
    PartialSpread result(space, opposite);
    for (auto a : result.members()) {
        for (auto b : ps.members()) {
            if (space.generator(a).point_mask.intersection_count(space.generator(b).point_mask) != 1) {
                throw Error(ErrorKind::StructureViolation, "opposite line does not meet an original line once");
            }
        }
    }
    return result;
}

}  // namespace polarspread
