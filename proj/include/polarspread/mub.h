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

#ifndef POLARSPREAD_MUB_H
#define POLARSPREAD_MUB_H

#include <cstddef>
#include <vector>

#include "polarspread/pauli.h"
#include "polarspread/spread.h"

namespace polarspread {

constexpr double kDefaultTolerance = 1e-9;

struct ProjectorBasis {
    std::size_t dim;
    /// Indexed by characters chi in (Z_d)^N, lexicographic.
    std::vector<DenseMatrix> projectors;
    std::size_t source_class;
};

/// Joint eigenprojectors of a class: for N members g_1..g_N whose images
/// form a basis of the generator, P_chi = prod_j (1/d) sum_k omega^{-k chi_j} g_j^k.
ProjectorBasis eigenprojectors(const CommutingClass &c, const FieldSpec &spec);

struct ProjectorResiduals {
    double idempotency = 0;
    double hermiticity = 0;
    double orthogonality = 0;
    double trace = 0;
    double completeness = 0;
    /// Max ||P A - A P|| over projectors P and class matrices A.
    double class_commutation = 0;

    double max() const;
};

ProjectorResiduals projector_residuals(const ProjectorBasis &basis, const CommutingClass &c,
                                       const FieldSpec &spec);

/// max over (i, j) of |tr(P_i Q_j) - 1/dim|.
double unbiasedness(const ProjectorBasis &p, const ProjectorBasis &q);

struct UMUBCertificate {
    std::vector<std::size_t> classes;
    std::size_t order = 0;
    CompletenessCert completeness;
    /// Unset when the numeric part was skipped for scale; validity then rests
    /// on completeness alone.
    std::optional<double> max_deviation;
    double target = 0;
    double tolerance = kDefaultTolerance;
    bool valid = false;
};

UMUBCertificate certify_weak_umub(const PartialSpread &ps, double tolerance = kDefaultTolerance);

}  // namespace polarspread

#endif
