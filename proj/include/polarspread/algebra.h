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

#ifndef POLARSPREAD_ALGEBRA_H
#define POLARSPREAD_ALGEBRA_H

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace polarspread {

using Residue = std::uint8_t;

/// Prime field F_d together with a fixed degree-N extension F_d[t]/(f).
///
/// The extension polynomial f is the least monic irreducible of degree N,
/// where candidates are ordered by the integer sum_i c_i d^i over their
/// non-leading coefficients c_0..c_{N-1}.
class FieldSpec {
   public:
    static constexpr unsigned kMaxPrime = 13;

    explicit FieldSpec(unsigned d, unsigned ext_degree = 1);

    unsigned d() const noexcept {
        return d_;
    }
    unsigned ext_degree() const noexcept {
        return ext_degree_;
    }
    /// Coefficients low to high, length ext_degree + 1, leading entry 1.
    const std::vector<Residue> &ext_poly() const noexcept {
        return ext_poly_;
    }

    Residue add(Residue a, Residue b) const noexcept {
        return static_cast<Residue>((a + b) % d_);
    }
    Residue sub(Residue a, Residue b) const noexcept {
        return static_cast<Residue>((a + d_ - b) % d_);
    }
    Residue neg(Residue a) const noexcept {
        return static_cast<Residue>((d_ - a) % d_);
    }
    Residue mul(Residue a, Residue b) const noexcept {
        return static_cast<Residue>((static_cast<unsigned>(a) * b) % d_);
    }
    Residue reduce(long long v) const noexcept {
        long long r = v % static_cast<long long>(d_);
        return static_cast<Residue>(r < 0 ? r + d_ : r);
    }
    Residue inv(Residue a) const;

    bool operator==(const FieldSpec &other) const = default;

   private:
    unsigned d_;
    unsigned ext_degree_;
    std::vector<Residue> ext_poly_;
    std::vector<Residue> inv_table_;
};

bool is_prime(unsigned n) noexcept;

/// Monic irreducibility by trial division against every monic polynomial of
/// degree at most half the input degree.
bool is_irreducible(const std::vector<Residue> &monic_poly, unsigned d);

Residue field_inv(Residue a, const FieldSpec &spec);

struct FVector {
    std::vector<Residue> coords;

    FVector() = default;
    explicit FVector(std::size_t n) : coords(n, 0) {
    }
    FVector(std::initializer_list<Residue> values) : coords(values) {
    }
    explicit FVector(std::vector<Residue> values) : coords(std::move(values)) {
    }

    std::size_t size() const noexcept {
        return coords.size();
    }
    Residue operator[](std::size_t i) const {
        return coords[i];
    }
    Residue &operator[](std::size_t i) {
        return coords[i];
    }
    bool is_zero() const noexcept;
    /// Index of the first nonzero coordinate, or size() for the zero vector.
    std::size_t leading_index() const noexcept;

    auto operator<=>(const FVector &) const = default;
    bool operator==(const FVector &) const = default;

    std::string str() const;
};

FVector vec_add(const FVector &a, const FVector &b, const FieldSpec &spec);
FVector vec_sub(const FVector &a, const FVector &b, const FieldSpec &spec);
FVector vec_scale(const FVector &a, Residue s, const FieldSpec &spec);
/// Scales so that the first nonzero coordinate is 1. Zero stays zero.
FVector normalized(const FVector &a, const FieldSpec &spec);

/// Row list over F_d with its rank computed at construction.
class FMatrix {
   public:
    FMatrix() = default;
    FMatrix(std::vector<FVector> rows, std::size_t cols, const FieldSpec &spec);
    /// Empty (zero-row) matrix with the given ambient width.
    static FMatrix empty(std::size_t cols);
    static FMatrix identity(std::size_t n, const FieldSpec &spec);

    const std::vector<FVector> &rows() const noexcept {
        return rows_;
    }
    const FVector &row(std::size_t i) const {
        return rows_[i];
    }
    std::size_t num_rows() const noexcept {
        return rows_.size();
    }
    std::size_t cols() const noexcept {
        return cols_;
    }
    std::size_t rank() const noexcept {
        return rank_;
    }

    bool operator==(const FMatrix &other) const noexcept {
        return cols_ == other.cols_ && rows_ == other.rows_;
    }
    auto operator<=>(const FMatrix &other) const noexcept {
        if (auto c = cols_ <=> other.cols_; c != 0) {
            return c;
        }
        return rows_ <=> other.rows_;
    }

    std::string str() const;

   private:
    std::vector<FVector> rows_;
    std::size_t cols_ = 0;
    std::size_t rank_ = 0;
};

/// Reduced row echelon form with zero rows removed. This is the canonical
/// basis of the row space: two matrices span the same space iff their rref
/// results compare equal.
FMatrix rref(const FMatrix &m, const FieldSpec &spec);

FMatrix stack(const FMatrix &a, const FMatrix &b, const FieldSpec &spec);
FMatrix subspace_sum(const FMatrix &a, const FMatrix &b, const FieldSpec &spec);
/// Intersection of two row spaces (Zassenhaus), returned in rref.
FMatrix subspace_meet(const FMatrix &a, const FMatrix &b, const FieldSpec &spec);
/// rref basis of { v : <row_i, v> = 0 for every row }.
FMatrix null_space(const FMatrix &constraints, const FieldSpec &spec);
bool in_row_space(const FMatrix &basis, const FVector &v, const FieldSpec &spec);
/// Every nonzero vector of the row space, in lexicographic order of the
/// coefficient tuples applied to the rows.
std::vector<FVector> nonzero_vectors(const FMatrix &basis, const FieldSpec &spec);
/// One normalized representative per projective point of the row space.
std::vector<FVector> projective_points(const FMatrix &basis, const FieldSpec &spec);

/// Square matrix inverse; throws DimensionMismatch if not square and
/// InvalidArgument if singular.
FMatrix inverse(const FMatrix &m, const FieldSpec &spec);
/// Row vector times matrix.
FVector vec_mat(const FVector &v, const FMatrix &m, const FieldSpec &spec);
FMatrix mat_mul(const FMatrix &a, const FMatrix &b, const FieldSpec &spec);

// Arithmetic in F_{d^N} = F_d[t]/(ext_poly); elements are coefficient
// vectors of length N, low degree first.
FVector ext_mul(const FVector &x, const FVector &y, const FieldSpec &spec);
FVector ext_one(const FieldSpec &spec);
/// Absolute trace F_{d^N} -> F_d, computed as the trace of multiplication by x.
Residue ext_trace(const FVector &x, const FieldSpec &spec);
/// Elements of F_{d^N} in lexicographic order of coefficient vectors.
std::vector<FVector> ext_elements(const FieldSpec &spec);

std::uint64_t ipow(std::uint64_t base, unsigned exp);

}  // namespace polarspread

#endif
