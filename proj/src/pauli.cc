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

#include "polarspread/pauli.h"

#include <cmath>
#include <numbers>
#include <numeric>
#include <queue>
#include <set>

#include "polarspread/error.h"

namespace polarspread {

FVector symplectic_image(const PauliOp &op) {
    if (op.a.size() != op.b.size()) {
        throw Error(ErrorKind::DimensionMismatch, "Pauli exponent vectors differ in length");
    }
    FVector v(2 * op.a.size());
    for (std::size_t i = 0; i < op.a.size(); i++) {
        v[2 * i] = op.a[i];
        v[2 * i + 1] = op.b[i];
    }
    return v;
}

PauliOp from_symplectic(const FVector &v, const FieldSpec &spec) {
    if (v.size() % 2 != 0) {
        throw Error(ErrorKind::DimensionMismatch, "symplectic vector must have even length");
    }
    std::size_t n = v.size() / 2;
    FVector a(n), b(n);
    for (std::size_t i = 0; i < n; i++) {
        a[i] = v[2 * i];
        b[i] = v[2 * i + 1];
    }
    return canonical_op(a, b, spec);
}

PauliOp canonical_op(const FVector &a, const FVector &b, const FieldSpec &spec) {
    unsigned phase = 0;
    if (spec.d() == 2) {
        for (std::size_t i = 0; i < a.size(); i++) {
            phase += a[i] * b[i];
        }
        phase %= 4;
    }
    return PauliOp{a, b, phase};
}

std::vector<PauliOp> coset_representatives(const FieldSpec &spec, unsigned n) {
    std::uint64_t total = ipow(spec.d(), 2 * n);
    std::vector<PauliOp> out;
    out.reserve(total - 1);
    for (std::uint64_t code = 1; code < total; code++) {
        FVector v(2 * n);
        std::uint64_t c = code;
        for (std::size_t i = 2 * n; i-- > 0;) {
            v[i] = static_cast<Residue>(c % spec.d());
            c /= spec.d();
        }
        out.push_back(from_symplectic(v, spec));
    }
    return out;
}

std::complex<double> root_of_unity(const FieldSpec &spec) {
    return std::polar(1.0, 2.0 * std::numbers::pi / spec.d());
}

namespace {

std::complex<double> phase_factor(unsigned phase_exp, const FieldSpec &spec) {
    unsigned order = spec.d() == 2 ? 4 : spec.d();
    return std::polar(1.0, 2.0 * std::numbers::pi * (phase_exp % order) / order);
}

}  // namespace

DenseMatrix pauli_matrix(const PauliOp &op, const FieldSpec &spec) {
    unsigned d = spec.d();
    std::size_t n = op.a.size();
    if (op.b.size() != n) {
        throw Error(ErrorKind::DimensionMismatch, "Pauli exponent vectors differ in length");
    }
    std::uint64_t dim = ipow(d, static_cast<unsigned>(n));
    if (dim > kMaxDenseDim) {
        throw Error(ErrorKind::ScaleExceeded, "dense Pauli matrices are limited to dimension 32");
    }
    DenseMatrix m = DenseMatrix::Zero(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
    std::complex<double> global = phase_factor(op.phase_exp, spec);
    std::complex<double> omega = root_of_unity(spec);
    std::vector<unsigned> digits(n);
    for (std::uint64_t s = 0; s < dim; s++) {
        std::uint64_t c = s;
        for (std::size_t i = n; i-- > 0;) {
            digits[i] = static_cast<unsigned>(c % d);
            c /= d;
        }
        // Z^b first: omega^{b.s}; then X^a shifts every digit.
        unsigned exponent = 0;
        std::uint64_t target = 0;
        for (std::size_t i = 0; i < n; i++) {
            exponent += op.b[i] * digits[i];
            target = target * d + (digits[i] + op.a[i]) % d;
        }
        m(static_cast<Eigen::Index>(target), static_cast<Eigen::Index>(s)) = global * std::pow(omega, exponent % d);
    }
    return m;
}

bool commutes(const PauliOp &p, const PauliOp &q, const PolarSpace &space) {
    return space.form(symplectic_image(p), symplectic_image(q)) == 0;
}

CommutingClass class_from_generator(const Generator &g, const PolarSpace &space) {
    CommutingClass c{{}, g.index};
    for (const auto &v : nonzero_vectors(g.basis, space.field())) {
        c.ops.push_back(from_symplectic(v, space.field()));
    }
    return c;
}

const Generator &generator_from_class(const CommutingClass &c, const PolarSpace &space) {
    std::size_t expected = static_cast<std::size_t>(ipow(space.d(), space.rank()) - 1);
    if (c.ops.size() != expected) {
        throw Error(ErrorKind::NotAClass, "a class must contain d^N - 1 operators");
    }
    std::vector<FVector> images;
    std::set<FVector> seen;
    for (const auto &op : c.ops) {
        if (op.a.size() != space.rank() || op.b.size() != space.rank()) {
            throw Error(ErrorKind::DimensionMismatch, "operator acts on the wrong number of qudits");
        }
        auto v = symplectic_image(op);
        if (v.is_zero()) {
            throw Error(ErrorKind::NotAClass, "a class contains no central operators");
        }
        if (!seen.insert(v).second) {
            throw Error(ErrorKind::NotAClass, "two operators share a center coset");
        }
        images.push_back(std::move(v));
    }
    FMatrix span = rref(FMatrix(images, space.dim(), space.field()), space.field());
    if (span.rank() != space.rank() || !space.is_totally_isotropic(span)) {
        throw Error(ErrorKind::NotAClass, "operator images do not span a totally isotropic rank-N subspace");
    }
    auto idx = space.find_generator(span);
    if (!idx) {
        throw Error(ErrorKind::NotAClass, "span is not in the generator catalog");
    }
    return space.generator(*idx);
}

double max_abs_entry(const DenseMatrix &m) {
    return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

namespace {

constexpr double kTol = 1e-9;

// Group elements generated by X_i, Z_i are monomial matrices whose entries
// are 2d-th roots of unity, so the column pattern and phase indices form an
// exact key.
std::vector<unsigned> monomial_key(const DenseMatrix &m, unsigned phase_order) {
    std::vector<unsigned> key;
    key.reserve(2 * static_cast<std::size_t>(m.cols()));
    for (Eigen::Index col = 0; col < m.cols(); col++) {
        Eigen::Index row;
        m.col(col).cwiseAbs().maxCoeff(&row);
        double angle = std::arg(m(row, col));
        long k = std::lround(angle * phase_order / (2.0 * std::numbers::pi));
        key.push_back(static_cast<unsigned>(row));
        key.push_back(static_cast<unsigned>(((k % static_cast<long>(phase_order)) + phase_order) % phase_order));
    }
    return key;
}

bool is_close(const DenseMatrix &a, const DenseMatrix &b) {
    return max_abs_entry(a - b) < kTol;
}

}  // namespace

CenterReport center_check(const FieldSpec &spec, unsigned n) {
    unsigned d = spec.d();
    std::uint64_t dim64 = ipow(d, n);
    if (n < 1 || dim64 > kMaxDenseDim) {
        throw Error(ErrorKind::ScaleExceeded, "center check is limited to dimension 32");
    }
    auto dim = static_cast<Eigen::Index>(dim64);
    CenterReport report{};
    report.d = d;
    report.n = n;

    std::vector<DenseMatrix> gens;
    for (unsigned i = 0; i < n; i++) {
        FVector a(n), b(n), zero(n);
        a[i] = 1;
        b[i] = 1;
        gens.push_back(pauli_matrix(PauliOp{a, zero, 0}, spec));
        gens.push_back(pauli_matrix(PauliOp{zero, b, 0}, spec));
    }

    unsigned phase_order = 2 * d;
    DenseMatrix identity = DenseMatrix::Identity(dim, dim);
    std::vector<DenseMatrix> elements{identity};
    std::set<std::vector<unsigned>> seen{monomial_key(identity, phase_order)};
    std::queue<std::size_t> frontier;
    frontier.push(0);
    while (!frontier.empty()) {
        std::size_t i = frontier.front();
        frontier.pop();
        for (const auto &g : gens) {
            DenseMatrix prod = elements[i] * g;
            if (seen.insert(monomial_key(prod, phase_order)).second) {
                elements.push_back(prod);
                frontier.push(elements.size() - 1);
            }
        }
    }
    report.group_order = elements.size();

    for (const auto &e : elements) {
        bool central = true;
        for (const auto &g : gens) {
            if (!is_close(e * g, g * e)) {
                central = false;
                break;
            }
        }
        if (central) {
            report.center_size++;
        }
    }

    std::complex<double> omega = root_of_unity(spec);
    report.scalars_central = true;
    for (unsigned k = 0; k < d; k++) {
        DenseMatrix s = std::pow(omega, k) * identity;
        for (const auto &e : elements) {
            if (!is_close(s * e, e * s)) {
                report.scalars_central = false;
            }
        }
    }

    report.no_central_representative = true;
    report.some_square_is_minus_identity = false;
    for (const auto &rep : coset_representatives(spec, n)) {
        DenseMatrix m = pauli_matrix(rep, spec);
        bool central = true;
        for (const auto &g : gens) {
            if (!is_close(m * g, g * m)) {
                central = false;
                break;
            }
        }
        if (central) {
            report.no_central_representative = false;
        }
        if (d == 2) {
            DenseMatrix bare = pauli_matrix(PauliOp{rep.a, rep.b, 0}, spec);
            if (is_close(bare * bare, -identity)) {
                report.some_square_is_minus_identity = true;
            }
        }
    }

    report.nonabelian = !is_close(gens[0] * gens[1], gens[1] * gens[0]);

    unsigned exponent = 1;
    for (const auto &e : elements) {
        DenseMatrix power = e;
        unsigned order = 1;
        while (!is_close(power, identity)) {
            power = power * e;
            order++;
            if (order > 4 * d) {
                throw Error(ErrorKind::StructureViolation, "element order exceeds 4d");
            }
        }
        exponent = std::lcm(exponent, order);
    }
    report.exponent = exponent;

    std::uint64_t expected_order = ipow(d, 2 * n + 1);
    report.ok = report.group_order == expected_order && report.center_size == d && report.scalars_central &&
                report.no_central_representative && report.nonabelian && report.exponent == (d == 2 ? 4 : d) &&
                (d != 2 || report.some_square_is_minus_identity);
    return report;
}

}  // namespace polarspread
