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

#ifndef POLARSPREAD_PAULI_H
#define POLARSPREAD_PAULI_H

#include <complex>
#include <cstddef>
#include <vector>

#include <Eigen/Dense>

#include "polarspread/polar.h"

namespace polarspread {

using DenseMatrix = Eigen::MatrixXcd;

/// omega^phase_exp X^a Z^b on N qudits (i^phase_exp for d = 2).
///
/// Factor 0 is the leftmost tensor slot and owns symplectic coordinates
/// (0, 1), so the symplectic image interleaves (a_0, b_0, a_1, b_1, ...).
struct PauliOp {
    FVector a;
    FVector b;
    unsigned phase_exp = 0;

    bool is_identity() const {
        return a.is_zero() && b.is_zero() && phase_exp == 0;
    }
    bool operator==(const PauliOp &) const = default;
};

FVector symplectic_image(const PauliOp &op);
PauliOp from_symplectic(const FVector &v, const FieldSpec &spec);

/// The coset representative used throughout: phase 0 for odd d, and
/// i^{a.b} for d = 2 so that every representative squares to the identity.
PauliOp canonical_op(const FVector &a, const FVector &b, const FieldSpec &spec);

/// One canonical representative per nonidentity coset, ordered by the
/// integer value of the symplectic image read as base-d digits.
std::vector<PauliOp> coset_representatives(const FieldSpec &spec, unsigned n);

struct CommutingClass {
    std::vector<PauliOp> ops;
    std::size_t generator_image;
};

constexpr std::size_t kMaxDenseDim = 32;

DenseMatrix pauli_matrix(const PauliOp &op, const FieldSpec &spec);
std::complex<double> root_of_unity(const FieldSpec &spec);

bool commutes(const PauliOp &p, const PauliOp &q, const PolarSpace &space);

/// The d^N - 1 canonical operators whose images are the nonzero vectors of g.
CommutingClass class_from_generator(const Generator &g, const PolarSpace &space);

/// Throws NotAClass unless the images span a totally isotropic rank-N space.
const Generator &generator_from_class(const CommutingClass &c, const PolarSpace &space);

struct CenterReport {
    unsigned d;
    unsigned n;
    std::size_t group_order;
    std::size_t center_size;
    bool scalars_central;
    bool no_central_representative;
    bool nonabelian;
    /// Exponent of the group generated by the single-qudit X and Z factors.
    unsigned exponent;
    /// d = 2 only: some X^a Z^b squares to -I.
    bool some_square_is_minus_identity;
    bool ok;
};

/// Matrix-level checks of the center and exponent: the group generated by
/// X_i and Z_i is closed up by breadth-first multiplication.
CenterReport center_check(const FieldSpec &spec, unsigned n);

double max_abs_entry(const DenseMatrix &m);

}  // namespace polarspread

#endif
