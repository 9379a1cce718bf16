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

#include <set>

#include "gtest/gtest.h"

#include "polarspread/constructions.h"
#include "polarspread/error.h"

using namespace polarspread;

namespace {

constexpr double kPi = 3.14159265358979323846;

// X^a Z^b built as a Kronecker product of single-qudit shift and clock
// matrices, qudit 0 leftmost, with the i^{a.b} phase for qubits.
DenseMatrix oracle_matrix(const PauliOp &op, unsigned d) {
    std::complex<double> w = std::polar(1.0, 2 * kPi / d);
    DenseMatrix out = DenseMatrix::Identity(1, 1);
    unsigned ab = 0;
    for (std::size_t i = 0; i < op.a.size(); i++) {
        DenseMatrix x = DenseMatrix::Zero(d, d);
        DenseMatrix z = DenseMatrix::Zero(d, d);
        for (unsigned s = 0; s < d; s++) {
            x((s + 1) % d, s) = 1;
            z(s, s) = std::pow(w, static_cast<double>(s));
        }
        DenseMatrix f = DenseMatrix::Identity(d, d);
        for (unsigned k = 0; k < op.a[i]; k++) {
            f = f * x;
        }
        for (unsigned k = 0; k < op.b[i]; k++) {
            f = f * z;
        }
        ab += op.a[i] * op.b[i];
        DenseMatrix next(out.rows() * d, out.cols() * d);
        for (Eigen::Index r = 0; r < out.rows(); r++) {
            for (Eigen::Index c = 0; c < out.cols(); c++) {
                next.block(r * d, c * d, d, d) = out(r, c) * f;
            }
        }
        out = next;
    }
    if (d == 2) {
        out *= std::pow(std::complex<double>(0, 1), static_cast<double>(ab % 4));
    }
    return out;
}

}  // namespace

TEST(pauli, matrix_examples) {
    FieldSpec f2(2);
    auto x = pauli_matrix(PauliOp{FVector{1}, FVector{0}, 0}, f2);
    auto z = pauli_matrix(PauliOp{FVector{0}, FVector{1}, 0}, f2);
    auto y = pauli_matrix(canonical_op(FVector{1}, FVector{1}, f2), f2);
    DenseMatrix ex(2, 2), ez(2, 2), ey(2, 2);
    ex << 0, 1, 1, 0;
    ez << 1, 0, 0, -1;
    ey << 0, std::complex<double>(0, -1), std::complex<double>(0, 1), 0;
    EXPECT_LT(max_abs_entry(x - ex), 1e-12);
    EXPECT_LT(max_abs_entry(z - ez), 1e-12);
    EXPECT_LT(max_abs_entry(y - ey), 1e-12);

    FieldSpec f3(3);
    auto x3 = pauli_matrix(PauliOp{FVector{1}, FVector{0}, 0}, f3);
    EXPECT_EQ(x3(1, 0), std::complex<double>(1, 0));
    EXPECT_EQ(x3(0, 2), std::complex<double>(1, 0));
}

TEST(pauli, matrices_match_kronecker_oracle) {
    for (auto [d, n] : {std::pair{2u, 1u}, std::pair{2u, 2u}, std::pair{3u, 2u}, std::pair{2u, 3u}, std::pair{5u, 2u}}) {
        FieldSpec spec(d);
        for (const auto &op : coset_representatives(spec, n)) {
            EXPECT_LT(max_abs_entry(pauli_matrix(op, spec) - oracle_matrix(op, d)), 1e-9);
        }
    }
}

TEST(pauli, representatives) {
    FieldSpec f3(3);
    auto reps = coset_representatives(f3, 2);
    EXPECT_EQ(reps.size(), 80u);
    std::set<FVector> images;
    for (const auto &op : reps) {
        EXPECT_FALSE(op.is_identity());
        EXPECT_EQ(op.phase_exp, 0u);
        images.insert(symplectic_image(op));
        EXPECT_EQ(from_symplectic(symplectic_image(op), f3), op);
    }
    EXPECT_EQ(images.size(), 80u);

    FieldSpec f2(2);
    for (const auto &op : coset_representatives(f2, 2)) {
        unsigned ab = 0;
        for (std::size_t i = 0; i < 2; i++) {
            ab += op.a[i] * op.b[i];
        }
        EXPECT_EQ(op.phase_exp, ab % 4);
        // Canonical qubit representatives are Hermitian.
        auto m = pauli_matrix(op, f2);
        EXPECT_LT(max_abs_entry(m - m.adjoint()), 1e-12);
    }
    auto image = symplectic_image(canonical_op(FVector{1, 0}, FVector{0, 1}, f2));
    EXPECT_EQ(image, (FVector{1, 0, 0, 1}));
}

TEST(pauli, commutation_matches_matrices) {
    for (auto [d, n] : {std::pair{2u, 2u}, std::pair{3u, 2u}}) {
        PolarSpace space(d, n);
        auto reps = coset_representatives(space.field(), n);
        std::vector<DenseMatrix> mats;
        for (const auto &op : reps) {
            mats.push_back(pauli_matrix(op, space.field()));
        }
        for (std::size_t i = 0; i < reps.size(); i++) {
            for (std::size_t j = 0; j < reps.size(); j++) {
                bool numeric = max_abs_entry(mats[i] * mats[j] - mats[j] * mats[i]) < 1e-9;
                EXPECT_EQ(commutes(reps[i], reps[j], space), numeric);
                EXPECT_EQ(numeric, space.form(symplectic_image(reps[i]), symplectic_image(reps[j])) == 0);
            }
        }
    }
}

TEST(pauli, hilbert_schmidt_orthogonality) {
    FieldSpec spec(3);
    auto reps = coset_representatives(spec, 2);
    for (std::size_t i = 0; i < reps.size(); i++) {
        auto p = pauli_matrix(reps[i], spec);
        EXPECT_NEAR(std::abs((p.adjoint() * p).trace()), 9.0, 1e-9);
        EXPECT_NEAR(std::abs(p.trace()), 0.0, 1e-9);
        for (std::size_t j = i + 1; j < reps.size(); j++) {
            EXPECT_NEAR(std::abs((p.adjoint() * pauli_matrix(reps[j], spec)).trace()), 0.0, 1e-9);
        }
    }
}

TEST(pauli, class_round_trip) {
    for (auto [d, n] : {std::pair{2u, 2u}, std::pair{3u, 2u}, std::pair{2u, 3u}}) {
        PolarSpace space(d, n);
        for (const auto &g : space.generators()) {
            auto c = class_from_generator(g, space);
            EXPECT_EQ(c.ops.size(), space.points_per_generator() * (d - 1));
            EXPECT_EQ(c.generator_image, g.index);
            for (const auto &p : c.ops) {
                for (const auto &q : c.ops) {
                    EXPECT_TRUE(commutes(p, q, space));
                }
            }
            EXPECT_EQ(generator_from_class(c, space).index, g.index);
        }
    }
}

TEST(pauli, class_rejections) {
    PolarSpace space(2, 2);
    auto c = class_from_generator(space.generator(0), space);
    auto dup = c;
    dup.ops[1] = dup.ops[0];
    EXPECT_THROW(generator_from_class(dup, space), Error);
    auto short_class = c;
    short_class.ops.pop_back();
    EXPECT_THROW(generator_from_class(short_class, space), Error);
    auto noncommuting = c;
    for (const auto &op : coset_representatives(space.field(), 2)) {
        if (!commutes(op, c.ops[0], space)) {
            noncommuting.ops[2] = op;
            break;
        }
    }
    try {
        generator_from_class(noncommuting, space);
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.kind(), ErrorKind::NotAClass);
    }
}

TEST(pauli, spread_classes_partition_the_group) {
    for (auto [d, n] : {std::pair{2u, 2u}, std::pair{3u, 2u}, std::pair{2u, 3u}}) {
        PolarSpace space(d, n);
        auto s = construct_symplectic_spread(space);
        std::set<FVector> seen;
        for (auto m : s.members()) {
            for (const auto &op : class_from_generator(space.generator(m), space).ops) {
                EXPECT_TRUE(seen.insert(symplectic_image(op)).second);
            }
        }
        EXPECT_EQ(seen.size(), coset_representatives(space.field(), n).size());
    }
}

TEST(pauli, center) {
    for (auto [d, n] : {std::pair{2u, 1u}, std::pair{2u, 2u}, std::pair{3u, 1u}, std::pair{3u, 2u}, std::pair{5u, 1u}}) {
        auto r = center_check(FieldSpec(d), n);
        std::size_t phases = d == 2 ? 2 : d;
        std::size_t cosets = 1;
        for (unsigned i = 0; i < 2 * n; i++) {
            cosets *= d;
        }
        EXPECT_EQ(r.group_order, phases * cosets);
        EXPECT_EQ(r.center_size, phases);
        EXPECT_TRUE(r.scalars_central);
        EXPECT_TRUE(r.no_central_representative);
        EXPECT_TRUE(r.nonabelian);
        EXPECT_EQ(r.exponent, d == 2 ? 4u : d);
        EXPECT_EQ(r.some_square_is_minus_identity, d == 2);
        EXPECT_TRUE(r.ok);
    }
    EXPECT_THROW(center_check(FieldSpec(2), 6), Error);
}

TEST(pauli, scale_limit) {
    FieldSpec f3(3);
    FVector a(4), b(4);
    a[0] = 1;
    try {
        pauli_matrix(PauliOp{a, b, 0}, f3);
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.kind(), ErrorKind::ScaleExceeded);
    }
}
