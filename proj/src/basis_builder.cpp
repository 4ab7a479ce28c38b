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

#include "locc/basis_builder.hpp"

#include <algorithm>
#include <cmath>

namespace locc {

namespace {

double max_form(std::span<const ComplexMatrix> ops, const ComplexVector &g) {
    double worst = 0.0;
    for (const auto &a : ops)
        worst = std::max(worst, std::abs(g.dot(a * g)));
    return worst;
}

double max_trace(const std::vector<ComplexMatrix> &ops) {
    double worst = 0.0;
    for (const auto &a : ops)
        worst = std::max(worst, std::abs(a.trace()));
    return worst;
}

} // namespace

std::vector<ComplexMatrix> compress(std::span<const ComplexMatrix> ops,
                                    const ComplexMatrix &complement) {
    std::vector<ComplexMatrix> out;
    out.reserve(ops.size());
    for (const auto &a : ops) {
        if (a.rows() != complement.rows())
            throw ShapeMismatch("compress: operator and complement dimensions differ");
        ComplexMatrix c = complement.adjoint() * a * complement;
        out.push_back(0.5 * (c + c.adjoint()));
    }
    return out;
}

std::size_t error_slots_for(std::size_t n) {
    if (n <= 2)
        return 0;
    if (n == 3)
        return 2;
    throw UnsupportedRegime("dim K = " + std::to_string(n) +
                            " >= 4: no convexity guarantee for a distinguishing basis");
}

DistinguishingBasis build_distinguishing_basis(std::span<const ComplexMatrix> ops,
                                               std::size_t dim_b, std::size_t error_slots,
                                               const BasisOptions &options) {
    const std::size_t n = ops.size();
    if (dim_b == 0)
        throw PreconditionViolated("build_distinguishing_basis: dim_b must be >= 1");
    for (const auto &a : ops)
        if (static_cast<std::size_t>(a.rows()) != dim_b || a.rows() != a.cols())
            throw ShapeMismatch("build_distinguishing_basis: operators must be dim_b x dim_b");
    if (n >= 4 && !options.best_effort)
        error_slots_for(n); // throws
    if (n <= 2 && error_slots != 0)
        throw PreconditionViolated("build_distinguishing_basis: N <= 2 requires 0 error slots");
    if (n == 3 && error_slots != 2)
        throw PreconditionViolated("build_distinguishing_basis: N = 3 requires 2 error slots");

    const auto d = static_cast<Eigen::Index>(dim_b);
    DistinguishingBasis basis;
    basis.best_effort = n >= 4;
    if (n == 0) {
        basis.vectors = ComplexMatrix::Identity(d, d);
        basis.residuals.assign(dim_b, 0.0);
        return basis;
    }

    ComplexMatrix complement = ComplexMatrix::Identity(d, d);
    std::vector<ComplexVector> chosen;
    std::vector<double> residuals;
    std::size_t slots = std::min(error_slots, dim_b);

    ZeroSearchOptions zopts;
    zopts.zero_tol = options.zero_tol;
    zopts.starts = options.starts;
    zopts.max_iterations = options.max_iterations;
    zopts.parallel = options.parallel;
    zopts.best_effort = options.best_effort;

    auto partial = [&] {
        ComplexMatrix m(d, static_cast<Eigen::Index>(chosen.size()));
        for (std::size_t j = 0; j < chosen.size(); ++j)
            m.col(static_cast<Eigen::Index>(j)) = chosen[j];
        return m;
    };

    while (static_cast<std::size_t>(complement.cols()) > slots) {
        const auto remaining = static_cast<std::size_t>(complement.cols());
        const auto compressed = compress(ops, complement);
        DeflationStep step;
        step.remaining_dim = remaining;

        ComplexVector g;
        if (remaining == 1) {
            // The compressed 1x1 operators equal their traces, which telescope
            // to zero: the last direction needs no search.
            g = complement.col(0);
            step.method = ZeroMethod::Dim1Trace;
            step.solved = false;
        } else {
            zopts.seed = stream_seed(options.seed, chosen.size());
            ZeroVectorResult z;
            try {
                z = find_zero_vector(compressed, remaining, zopts);
            } catch (const SearchFailed &e) {
                if (basis.best_effort) {
                    slots = remaining;
                    break;
                }
                throw BasisSearchFailed(e.what(), e.best(), partial());
            }
            g = complement * z.vector;
            step.method = z.method;
        }

        // Re-orthonormalize against accepted vectors to bound drift.
        for (int pass = 0; pass < 2; ++pass)
            for (const auto &c : chosen)
                g -= c.dot(g) * c;
        g.normalize();

        step.residual = max_form(ops, g);
        if (step.residual > 10.0 * options.zero_tol) {
            ZeroVectorResult best{g, step.residual, step.method};
            if (basis.best_effort) {
                slots = remaining;
                break;
            }
            throw BasisSearchFailed("build_distinguishing_basis: lifted vector residual " +
                                        std::to_string(step.residual) + " exceeds 10*zero_tol",
                                    best, partial());
        }
        chosen.push_back(g);
        residuals.push_back(step.residual);

        if (remaining == 1) {
            complement = ComplexMatrix(d, 0);
        } else {
            ComplexMatrix zc = complement.adjoint() * g; // coordinates of g
            complement = complement * orthogonal_complement(zc.col(0).normalized());
        }
        step.trace_after = complement.cols() > 0 ? max_trace(compress(ops, complement)) : 0.0;
        basis.steps.push_back(step);
    }

    // Error slots first, then the zero vectors in the order found.
    basis.error_slots = static_cast<std::size_t>(complement.cols());
    basis.vectors = ComplexMatrix(d, d);
    for (Eigen::Index j = 0; j < complement.cols(); ++j) {
        basis.vectors.col(j) = complement.col(j);
        basis.residuals.push_back(max_form(ops, complement.col(j)));
    }
    for (std::size_t j = 0; j < chosen.size(); ++j) {
        basis.vectors.col(complement.cols() + static_cast<Eigen::Index>(j)) = chosen[j];
        basis.residuals.push_back(residuals[j]);
    }
    return basis;
}

BasisReport verify_basis(std::span<const ComplexMatrix> ops, const DistinguishingBasis &basis,
                         double tol) {
    BasisReport report;
    report.gram_deviation = gram_deviation(basis.vectors);
    for (Eigen::Index k = static_cast<Eigen::Index>(basis.error_slots); k < basis.vectors.cols();
         ++k)
        report.max_residual = std::max(report.max_residual, max_form(ops, basis.vectors.col(k)));
    report.pass = report.max_residual <= tol && report.gram_deviation <= tol;
    return report;
}

} // namespace locc
