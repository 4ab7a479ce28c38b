// Copyright 2026 The locc-discrim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "locc/numerics.hpp"
#include "locc/states.hpp"

namespace locc {

/// All products G_ml = X_m^* X_l, each dim_b x dim_b.
struct GramTable {
    std::size_t count = 0;
    std::vector<ComplexMatrix> products; // row-major in (m, l)

    const ComplexMatrix &at(std::size_t m, std::size_t l) const {
        return products[m * count + l];
    }
};

GramTable gram_operators(const OperatorRep &rep);

/// The M(M-1) generators X_m^*X_l + X_l^*X_m and i(X_m^*X_l - X_l^*X_m),
/// m < l, in that interleaved order.
std::vector<ComplexMatrix> kspace_generators(const OperatorRep &rep);

/// HS-orthonormal basis (A_1..A_N) of the real span of the generators.
struct KSpaceBasis {
    std::vector<ComplexMatrix> operators;
    std::size_t generator_count = 0;
    double rank_tol = 1e-8;
    /// Relative residuals of the generators that decided the rank.
    double smallest_kept_residual = 0.0;
    double largest_dropped_residual = 0.0;
    std::vector<std::string> warnings;

    std::size_t dim() const { return operators.size(); }
};

KSpaceBasis build_kspace(const OperatorRep &rep, double rank_tol = 1e-8);

struct TracelessReport {
    std::vector<double> traces;     // |Tr A_i|
    std::vector<double> hermiticity; // max |A_i - A_i^*|
    bool pass = true;
};

TracelessReport verify_traceless(std::span<const ComplexMatrix> operators, double tol);
TracelessReport verify_traceless(const KSpaceBasis &basis, double tol);

/// Both sides of the distinguishability certificate for one unit vector g:
/// max_i |<g, A_i g>| and max_{l != m} |<X_l g, X_m g>|. One vanishes iff the
/// other does.
struct OrthogonalityCertificate {
    double max_form = 0.0;
    double max_cross_overlap = 0.0;
};

OrthogonalityCertificate certificate(const KSpaceBasis &basis, const OperatorRep &rep,
                                     const ComplexVector &g);

} // namespace locc
