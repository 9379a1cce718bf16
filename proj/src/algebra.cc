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

#include "polarspread/algebra.h"

#include <algorithm>
#include <sstream>

#include "polarspread/error.h"

namespace polarspread {

std::string_view error_kind_name(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::ZeroInverse:
            return "ZeroInverse";
        case ErrorKind::NotPrime:
            return "NotPrime";
        case ErrorKind::InvalidArgument:
            return "InvalidArgument";
        case ErrorKind::DimensionMismatch:
            return "DimensionMismatch";
        case ErrorKind::ScaleExceeded:
            return "ScaleExceeded";
        case ErrorKind::PointOnGenerator:
            return "PointOnGenerator";
        case ErrorKind::NotDisjoint:
            return "NotDisjoint";
        case ErrorKind::NotIsotropic:
            return "NotIsotropic";
        case ErrorKind::WrongRank:
            return "WrongRank";
        case ErrorKind::NotRankTwo:
            return "NotRankTwo";
        case ErrorKind::NotASpread:
            return "NotASpread";
        case ErrorKind::GeneratorInSpread:
            return "GeneratorInSpread";
        case ErrorKind::NoPartner:
            return "NoPartner";
        case ErrorKind::AmbiguousPartner:
            return "AmbiguousPartner";
        case ErrorKind::BadK:
            return "BadK";
        case ErrorKind::StructureViolation:
            return "StructureViolation";
        case ErrorKind::NoSuitableChi:
            return "NoSuitableChi";
        case ErrorKind::NoBeta:
            return "NoBeta";
        case ErrorKind::NotAClass:
            return "NotAClass";
        case ErrorKind::NonDiagonalizable:
            return "NonDiagonalizable";
        case ErrorKind::NotUnextendibleTriple:
            return "NotUnextendibleTriple";
        case ErrorKind::ParseError:
            return "ParseError";
    }
    return "Unknown";
}

std::uint64_t ipow(std::uint64_t base, unsigned exp) {
    std::uint64_t r = 1;
    for (unsigned i = 0; i < exp; i++) {
        r *= base;
    }
    return r;
}

bool is_prime(unsigned n) noexcept {
    if (n < 2) {
        return false;
    }
    for (unsigned k = 2; k * k <= n; k++) {
        if (n % k == 0) {
            return false;
        }
    }
    return true;
}

namespace {

// Remainder of a modulo monic b over F_d; both low-to-high.
std::vector<Residue> poly_mod(std::vector<Residue> a, const std::vector<Residue> &b, unsigned d) {
    std::size_t db = b.size() - 1;
    while (a.size() > db) {
        Residue lead = a.back();
        if (lead != 0) {
            std::size_t shift = a.size() - 1 - db;
            for (std::size_t i = 0; i <= db; i++) {
                a[shift + i] = static_cast<Residue>((a[shift + i] + d * d - lead * b[i]) % d);
            }
        }
        a.pop_back();
    }
    return a;
}

// Monic polynomial of the given degree whose non-leading coefficients are the
// base-d digits of code.
std::vector<Residue> monic_from_code(std::uint64_t code, unsigned degree, unsigned d) {
    std::vector<Residue> p(degree + 1, 0);
    for (unsigned i = 0; i < degree; i++) {
        p[i] = static_cast<Residue>(code % d);
        code /= d;
    }
    p[degree] = 1;
    return p;
}

}  // namespace

bool is_irreducible(const std::vector<Residue> &monic_poly, unsigned d) {
    std::size_t degree = monic_poly.size() - 1;
    if (degree == 0) {
        return false;
    }
    for (unsigned k = 1; 2 * k <= degree; k++) {
        std::uint64_t count = ipow(d, k);
        for (std::uint64_t code = 0; code < count; code++) {
            auto divisor = monic_from_code(code, k, d);
            auto rem = poly_mod(monic_poly, divisor, d);
            if (std::all_of(rem.begin(), rem.end(), [](Residue r) { return r == 0; })) {
                return false;
            }
        }
    }
    return true;
}

FieldSpec::FieldSpec(unsigned d, unsigned ext_degree) : d_(d), ext_degree_(ext_degree) {
    if (!is_prime(d)) {
        throw Error(ErrorKind::NotPrime, "field modulus " + std::to_string(d) + " is not prime");
    }
    if (d > kMaxPrime) {
        throw Error(ErrorKind::ScaleExceeded, "field modulus " + std::to_string(d) + " exceeds 13");
    }
    if (ext_degree == 0 || ext_degree > 8) {
        throw Error(ErrorKind::InvalidArgument, "extension degree must lie in [1, 8]");
    }
    inv_table_.assign(d, 0);
    for (unsigned a = 1; a < d; a++) {
        for (unsigned b = 1; b < d; b++) {
            if ((a * b) % d == 1) {
                inv_table_[a] = static_cast<Residue>(b);
            }
        }
    }
    std::uint64_t count = ipow(d, ext_degree);
    for (std::uint64_t code = 0; code < count; code++) {
        auto p = monic_from_code(code, ext_degree, d);
        if (is_irreducible(p, d)) {
            ext_poly_ = std::move(p);
            break;
        }
    }
}

Residue FieldSpec::inv(Residue a) const {
    if (a % d_ == 0) {
        throw Error(ErrorKind::ZeroInverse, "zero has no inverse mod " + std::to_string(d_));
    }
    return inv_table_[a % d_];
}

Residue field_inv(Residue a, const FieldSpec &spec) {
    return spec.inv(a);
}

bool FVector::is_zero() const noexcept {
    return std::all_of(coords.begin(), coords.end(), [](Residue r) { return r == 0; });
}

std::size_t FVector::leading_index() const noexcept {
    for (std::size_t i = 0; i < coords.size(); i++) {
        if (coords[i] != 0) {
            return i;
        }
    }
    return coords.size();
}

std::string FVector::str() const {
    std::ostringstream out;
    out << "(";
    for (std::size_t i = 0; i < coords.size(); i++) {
        out << (i ? "," : "") << static_cast<int>(coords[i]);
    }
    out << ")";
    return out.str();
}

static void require_same_size(const FVector &a, const FVector &b) {
    if (a.size() != b.size()) {
        throw Error(ErrorKind::DimensionMismatch,
                    "vector lengths " + std::to_string(a.size()) + " and " + std::to_string(b.size()));
    }
}

FVector vec_add(const FVector &a, const FVector &b, const FieldSpec &spec) {
    require_same_size(a, b);
    FVector r(a.size());
    for (std::size_t i = 0; i < a.size(); i++) {
        r[i] = spec.add(a[i], b[i]);
    }
    return r;
}

FVector vec_sub(const FVector &a, const FVector &b, const FieldSpec &spec) {
    require_same_size(a, b);
    FVector r(a.size());
    for (std::size_t i = 0; i < a.size(); i++) {
        r[i] = spec.sub(a[i], b[i]);
    }
    return r;
}

FVector vec_scale(const FVector &a, Residue s, const FieldSpec &spec) {
    FVector r(a.size());
    for (std::size_t i = 0; i < a.size(); i++) {
        r[i] = spec.mul(a[i], s);
    }
    return r;
}

FVector normalized(const FVector &a, const FieldSpec &spec) {
    std::size_t lead = a.leading_index();
    if (lead == a.size() || a[lead] == 1) {
        return a;
    }
    return vec_scale(a, spec.inv(a[lead]), spec);
}

namespace {

// In-place Gauss-Jordan elimination; returns the rank and leaves the rows in
// rref order (nonzero rows first).
std::size_t eliminate(std::vector<FVector> &rows, std::size_t cols, const FieldSpec &spec) {
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < rows.size(); c++) {
        std::size_t pivot = rank;
        while (pivot < rows.size() && rows[pivot][c] == 0) {
            pivot++;
        }
        if (pivot == rows.size()) {
            continue;
        }
        std::swap(rows[rank], rows[pivot]);
        Residue s = spec.inv(rows[rank][c]);
        if (s != 1) {
            for (auto &x : rows[rank].coords) {
                x = spec.mul(x, s);
            }
        }
        for (std::size_t r = 0; r < rows.size(); r++) {
            if (r == rank || rows[r][c] == 0) {
                continue;
            }
            Residue f = rows[r][c];
            for (std::size_t k = c; k < rows[r].size(); k++) {
                rows[r][k] = spec.sub(rows[r][k], spec.mul(f, rows[rank][k]));
            }
        }
        rank++;
    }
    return rank;
}

}  // namespace

FMatrix::FMatrix(std::vector<FVector> rows, std::size_t cols, const FieldSpec &spec)
    : rows_(std::move(rows)), cols_(cols) {
    for (auto &r : rows_) {
        if (r.size() != cols_) {
            throw Error(ErrorKind::DimensionMismatch,
                        "row of length " + std::to_string(r.size()) + " in width-" + std::to_string(cols_) + " matrix");
        }
        for (auto &x : r.coords) {
            x = static_cast<Residue>(x % spec.d());
        }
    }
    auto scratch = rows_;
    rank_ = eliminate(scratch, cols_, spec);
}

FMatrix FMatrix::empty(std::size_t cols) {
    FMatrix m;
    m.cols_ = cols;
    return m;
}

FMatrix FMatrix::identity(std::size_t n, const FieldSpec &spec) {
    std::vector<FVector> rows(n, FVector(n));
    for (std::size_t i = 0; i < n; i++) {
        rows[i][i] = 1;
    }
    return FMatrix(std::move(rows), n, spec);
}

std::string FMatrix::str() const {
    std::ostringstream out;
    out << "[";
    for (std::size_t i = 0; i < rows_.size(); i++) {
        out << (i ? " " : "") << rows_[i].str();
    }
    out << "]";
    return out.str();
}

FMatrix rref(const FMatrix &m, const FieldSpec &spec) {
    auto rows = m.rows();
    std::size_t rank = eliminate(rows, m.cols(), spec);
    rows.resize(rank);
    return FMatrix(std::move(rows), m.cols(), spec);
}

FMatrix stack(const FMatrix &a, const FMatrix &b, const FieldSpec &spec) {
    if (a.cols() != b.cols()) {
        throw Error(ErrorKind::DimensionMismatch,
                    "ambient widths " + std::to_string(a.cols()) + " and " + std::to_string(b.cols()));
    }
    auto rows = a.rows();
    rows.insert(rows.end(), b.rows().begin(), b.rows().end());
    return FMatrix(std::move(rows), a.cols(), spec);
}

FMatrix subspace_sum(const FMatrix &a, const FMatrix &b, const FieldSpec &spec) {
    return rref(stack(a, b, spec), spec);
}

FMatrix subspace_meet(const FMatrix &a, const FMatrix &b, const FieldSpec &spec) {
    if (a.cols() != b.cols()) {
        throw Error(ErrorKind::DimensionMismatch,
                    "ambient widths " + std::to_string(a.cols()) + " and " + std::to_string(b.cols()));
    }
    std::size_t n = a.cols();
    std::vector<FVector> rows;
    for (const auto &r : a.rows()) {
        FVector w(2 * n);
        std::copy(r.coords.begin(), r.coords.end(), w.coords.begin());
        std::copy(r.coords.begin(), r.coords.end(), w.coords.begin() + n);
        rows.push_back(std::move(w));
    }
    for (const auto &r : b.rows()) {
        FVector w(2 * n);
        std::copy(r.coords.begin(), r.coords.end(), w.coords.begin());
        rows.push_back(std::move(w));
    }
    std::size_t rank = eliminate(rows, 2 * n, spec);
    std::vector<FVector> meet;
    for (std::size_t i = 0; i < rank; i++) {
        if (rows[i].leading_index() >= n) {
            meet.emplace_back(std::vector<Residue>(rows[i].coords.begin() + n, rows[i].coords.end()));
        }
    }
    FMatrix result = rref(FMatrix(std::move(meet), n, spec), spec);
    std::size_t sum_dim = subspace_sum(a, b, spec).rank();
    if (result.rank() + sum_dim != a.rank() + b.rank()) {
        throw Error(ErrorKind::StructureViolation, "intersection dimension formula violated");
    }
    return result;
}

FMatrix null_space(const FMatrix &constraints, const FieldSpec &spec) {
    std::size_t n = constraints.cols();
    auto rows = constraints.rows();
    std::size_t rank = eliminate(rows, n, spec);
    rows.resize(rank);
    std::vector<bool> is_pivot(n, false);
    std::vector<std::size_t> pivot_col(rank);
    for (std::size_t i = 0; i < rank; i++) {
        pivot_col[i] = rows[i].leading_index();
        is_pivot[pivot_col[i]] = true;
    }
    std::vector<FVector> basis;
    for (std::size_t free = 0; free < n; free++) {
        if (is_pivot[free]) {
            continue;
        }
        FVector v(n);
        v[free] = 1;
        for (std::size_t i = 0; i < rank; i++) {
            v[pivot_col[i]] = spec.neg(rows[i][free]);
        }
        basis.push_back(std::move(v));
    }
    return rref(FMatrix(std::move(basis), n, spec), spec);
}

bool in_row_space(const FMatrix &basis, const FVector &v, const FieldSpec &spec) {
    std::vector<FVector> single{v};
    FMatrix extended = stack(basis, FMatrix(std::move(single), basis.cols(), spec), spec);
    return extended.rank() == basis.rank();
}

namespace {

template <typename Fn>
void for_each_coefficients(std::size_t r, unsigned d, bool normalized_only, Fn &&fn) {
    std::vector<Residue> lambda(r, 0);
    std::uint64_t total = ipow(d, static_cast<unsigned>(r));
    for (std::uint64_t code = 1; code < total; code++) {
        std::uint64_t c = code;
        for (std::size_t i = r; i-- > 0;) {
            lambda[i] = static_cast<Residue>(c % d);
            c /= d;
        }
        if (normalized_only) {
            std::size_t lead = 0;
            while (lambda[lead] == 0) {
                lead++;
            }
            if (lambda[lead] != 1) {
                continue;
            }
        }
        fn(lambda);
    }
}

FVector combine(const FMatrix &basis, const std::vector<Residue> &lambda, const FieldSpec &spec) {
    FVector v(basis.cols());
    for (std::size_t i = 0; i < lambda.size(); i++) {
        if (lambda[i] == 0) {
            continue;
        }
        const auto &row = basis.row(i);
        for (std::size_t k = 0; k < v.size(); k++) {
            v[k] = spec.add(v[k], spec.mul(lambda[i], row[k]));
        }
    }
    return v;
}

}  // namespace

std::vector<FVector> nonzero_vectors(const FMatrix &basis, const FieldSpec &spec) {
    std::vector<FVector> out;
    for_each_coefficients(basis.num_rows(), spec.d(), false,
                          [&](const std::vector<Residue> &lambda) { out.push_back(combine(basis, lambda, spec)); });
    return out;
}

std::vector<FVector> projective_points(const FMatrix &basis, const FieldSpec &spec) {
    std::vector<FVector> out;
    for_each_coefficients(basis.num_rows(), spec.d(), true, [&](const std::vector<Residue> &lambda) {
        out.push_back(normalized(combine(basis, lambda, spec), spec));
    });
    return out;
}

FMatrix inverse(const FMatrix &m, const FieldSpec &spec) {
    std::size_t n = m.cols();
    if (m.num_rows() != n) {
        throw Error(ErrorKind::DimensionMismatch, "inverse of a non-square matrix");
    }
    std::vector<FVector> rows;
    for (std::size_t i = 0; i < n; i++) {
        FVector w(2 * n);
        std::copy(m.row(i).coords.begin(), m.row(i).coords.end(), w.coords.begin());
        w[n + i] = 1;
        rows.push_back(std::move(w));
    }
    std::size_t rank = eliminate(rows, n, spec);
    if (rank != n) {
        throw Error(ErrorKind::InvalidArgument, "matrix is singular");
    }
    std::vector<FVector> inv;
    for (auto &r : rows) {
        inv.emplace_back(std::vector<Residue>(r.coords.begin() + n, r.coords.end()));
    }
    return FMatrix(std::move(inv), n, spec);
}

FVector vec_mat(const FVector &v, const FMatrix &m, const FieldSpec &spec) {
    if (v.size() != m.num_rows()) {
        throw Error(ErrorKind::DimensionMismatch, "vector-matrix product shape");
    }
    FVector out(m.cols());
    for (std::size_t i = 0; i < v.size(); i++) {
        if (v[i] == 0) {
            continue;
        }
        for (std::size_t k = 0; k < m.cols(); k++) {
            out[k] = spec.add(out[k], spec.mul(v[i], m.row(i)[k]));
        }
    }
    return out;
}

FMatrix mat_mul(const FMatrix &a, const FMatrix &b, const FieldSpec &spec) {
    std::vector<FVector> rows;
    rows.reserve(a.num_rows());
    for (const auto &r : a.rows()) {
        rows.push_back(vec_mat(r, b, spec));
    }
    return FMatrix(std::move(rows), b.cols(), spec);
}

FVector ext_mul(const FVector &x, const FVector &y, const FieldSpec &spec) {
    std::size_t n = spec.ext_degree();
    if (x.size() != n || y.size() != n) {
        throw Error(ErrorKind::DimensionMismatch, "extension field elements must have length N");
    }
    std::vector<Residue> prod(2 * n - 1, 0);
    for (std::size_t i = 0; i < n; i++) {
        for (std::size_t j = 0; j < n; j++) {
            prod[i + j] = spec.add(prod[i + j], spec.mul(x[i], y[j]));
        }
    }
    auto rem = poly_mod(std::move(prod), spec.ext_poly(), spec.d());
    rem.resize(n, 0);
    return FVector(std::move(rem));
}

FVector ext_one(const FieldSpec &spec) {
    FVector one(spec.ext_degree());
    one[0] = 1;
    return one;
}

Residue ext_trace(const FVector &x, const FieldSpec &spec) {
    std::size_t n = spec.ext_degree();
    Residue tr = 0;
    for (std::size_t i = 0; i < n; i++) {
        FVector basis(n);
        basis[i] = 1;
        tr = spec.add(tr, ext_mul(x, basis, spec)[i]);
    }
    return tr;
}

std::vector<FVector> ext_elements(const FieldSpec &spec) {
    std::size_t n = spec.ext_degree();
    std::uint64_t total = ipow(spec.d(), static_cast<unsigned>(n));
    std::vector<FVector> out;
    out.reserve(total);
    for (std::uint64_t code = 0; code < total; code++) {
        FVector v(n);
        std::uint64_t c = code;
        for (std::size_t i = n; i-- > 0;) {
            v[i] = static_cast<Residue>(c % spec.d());
            c /= spec.d();
        }
        out.push_back(std::move(v));
    }
    return out;
}

}  // namespace polarspread
