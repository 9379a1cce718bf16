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

#include "polarspread/mub.h"

#include <algorithm>

#include "polarspread/error.h"

namespace polarspread {

double ProjectorResiduals::max() const {
    return std::max({idempotency, hermiticity, orthogonality, trace, completeness, class_commutation});
}

ProjectorBasis eigenprojectors(const CommutingClass &c, const FieldSpec &spec) {
    if (c.ops.empty()) {
        throw Error(ErrorKind::NotAClass, "empty class");
    }
    unsigned d = spec.d();
    std::size_t n = c.ops.front().a.size();
    std::uint64_t dim64 = ipow(d, static_cast<unsigned>(n));
    if (dim64 > kMaxDenseDim) {
        throw Error(ErrorKind::ScaleExceeded, "eigenprojectors are limited to dimension 32");
    }
    auto dim = static_cast<Eigen::Index>(dim64);

    std::vector<const PauliOp *> chosen;
    std::vector<FVector> images;
    for (const auto &op : c.ops) {
        auto trial = images;
        trial.push_back(symplectic_image(op));
        if (FMatrix(trial, 2 * n, spec).rank() == trial.size()) {
            images = std::move(trial);
            chosen.push_back(&op);
            if (chosen.size() == n) {
                break;
            }
        }
    }
    if (chosen.size() != n) {
        throw Error(ErrorKind::NotAClass, "class images do not have rank N");
    }

    DenseMatrix identity = DenseMatrix::Identity(dim, dim);
    std::complex<double> omega = root_of_unity(spec);
    // powers[j][k] = g_j^k
    std::vector<std::vector<DenseMatrix>> powers(n);
    for (std::size_t j = 0; j < n; j++) {
        DenseMatrix g = pauli_matrix(*chosen[j], spec);
        powers[j].push_back(identity);
        for (unsigned k = 1; k <= d; k++) {
            powers[j].push_back(powers[j].back() * g);
        }
        if (max_abs_entry(powers[j][d] - identity) > 1e-9) {
            throw Error(ErrorKind::NonDiagonalizable, "class member does not have order d");
        }
        powers[j].pop_back();
    }

    ProjectorBasis out{static_cast<std::size_t>(dim64), {}, c.generator_image};
    std::vector<unsigned> chi(n, 0);
    for (std::uint64_t code = 0; code < dim64; code++) {
        std::uint64_t r = code;
        for (std::size_t j = n; j-- > 0;) {
            chi[j] = static_cast<unsigned>(r % d);
            r /= d;
        }
        DenseMatrix p = identity;
        for (std::size_t j = 0; j < n; j++) {
            DenseMatrix factor = DenseMatrix::Zero(dim, dim);
            for (unsigned k = 0; k < d; k++) {
                factor += std::pow(omega, static_cast<double>((d - (k * chi[j]) % d) % d)) * powers[j][k];
            }
            p = p * (factor / static_cast<double>(d));
        }
        out.projectors.push_back(std::move(p));
    }
    return out;
}

ProjectorResiduals projector_residuals(const ProjectorBasis &basis, const CommutingClass &c,
                                       const FieldSpec &spec) {
    ProjectorResiduals r;
    auto dim = static_cast<Eigen::Index>(basis.dim);
    DenseMatrix sum = DenseMatrix::Zero(dim, dim);
    std::vector<DenseMatrix> members;
    for (const auto &op : c.ops) {
        members.push_back(pauli_matrix(op, spec));
    }
    for (std::size_t i = 0; i < basis.projectors.size(); i++) {
        const auto &p = basis.projectors[i];
        sum += p;
        r.idempotency = std::max(r.idempotency, max_abs_entry(p * p - p));
        r.hermiticity = std::max(r.hermiticity, max_abs_entry(p - p.adjoint()));
        r.trace = std::max(r.trace, std::abs(p.trace() - 1.0));
        for (std::size_t j = i + 1; j < basis.projectors.size(); j++) {
            r.orthogonality = std::max(r.orthogonality, max_abs_entry(p * basis.projectors[j]));
        }
        for (const auto &a : members) {
            r.class_commutation = std::max(r.class_commutation, max_abs_entry(p * a - a * p));
        }
    }
    r.completeness = max_abs_entry(sum - DenseMatrix::Identity(dim, dim));
    return r;
}

double unbiasedness(const ProjectorBasis &p, const ProjectorBasis &q) {
    if (p.dim != q.dim) {
        throw Error(ErrorKind::DimensionMismatch, "projector bases of different dimension");
    }
    double target = 1.0 / static_cast<double>(p.dim);
    double worst = 0;
    for (const auto &a : p.projectors) {
        for (const auto &b : q.projectors) {
            // tr(AB) without forming the product.
            std::complex<double> tr = a.cwiseProduct(b.transpose()).sum();
            worst = std::max(worst, std::abs(tr - target));
        }
    }
    return worst;
}

UMUBCertificate certify_weak_umub(const PartialSpread &ps, double tolerance) {
    const auto &space = ps.space();
    UMUBCertificate cert;
    cert.classes = ps.members();
    cert.order = ps.size();
    cert.completeness = is_complete(ps);
    cert.tolerance = tolerance;
    std::uint64_t dim = ipow(space.d(), space.rank());
    cert.target = 1.0 / static_cast<double>(dim);
    if (dim <= kMaxDenseDim) {
        std::vector<ProjectorBasis> bases;
        for (auto m : ps.members()) {
            bases.push_back(eigenprojectors(class_from_generator(space.generator(m), space), space.field()));
        }
        double worst = 0;
        for (std::size_t i = 0; i < bases.size(); i++) {
            for (std::size_t j = i + 1; j < bases.size(); j++) {
                worst = std::max(worst, unbiasedness(bases[i], bases[j]));
            }
        }
        cert.max_deviation = worst;
    }
    cert.valid = cert.completeness.complete && (!cert.max_deviation || *cert.max_deviation < tolerance);
    return cert;
}

}  // namespace polarspread
