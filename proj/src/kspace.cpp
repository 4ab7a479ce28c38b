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

#include "locc/kspace.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace locc {

GramTable gram_operators(const OperatorRep &rep) {
    GramTable table;
    table.count = rep.matrices.size();
    table.products.reserve(table.count * table.count);
    for (const auto &xm : rep.matrices)
        for (const auto &xl : rep.matrices)
            table.products.push_back(xm.adjoint() * xl);
    return table;
}

std::vector<ComplexMatrix> kspace_generators(const OperatorRep &rep) {
    const auto table = gram_operators(rep);
    const Complex i_unit(0.0, 1.0);
    std::vector<ComplexMatrix> generators;
    for (std::size_t m = 0; m < table.count; ++m) {
        for (std::size_t l = m + 1; l < table.count; ++l) {
            const auto &g_ml = table.at(m, l);
            const auto &g_lm = table.at(l, m);
            generators.push_back(g_ml + g_lm);
            generators.push_back(i_unit * (g_ml - g_lm));
        }
    }
    return generators;
}

KSpaceBasis build_kspace(const OperatorRep &rep, double rank_tol) {
    if (rep.matrices.size() < 2)
        throw PreconditionViolated("build_kspace: need at least two states");
    auto generators = kspace_generators(rep);
    // Remove round-off anti-Hermitian parts so the basis is exactly Hermitian.
    for (auto &g : generators)
        g = 0.5 * (g + g.adjoint()).eval();

    KSpaceBasis basis;
    basis.generator_count = generators.size();
    basis.rank_tol = rank_tol;

    const auto ortho = gram_schmidt_real(std::span<const ComplexMatrix>(generators), rank_tol);
    for (auto op : ortho.basis)
        basis.operators.push_back(0.5 * (op + op.adjoint()));

    double smallest_kept = 1.0;
    double largest_dropped = 0.0;
    std::size_t near = 0;
    for (std::size_t i = 0; i < ortho.residuals.size(); ++i) {
        const double r = ortho.residuals[i];
        const bool kept = std::find(ortho.kept.begin(), ortho.kept.end(), i) != ortho.kept.end();
        if (kept)
            smallest_kept = std::min(smallest_kept, r);
        else
            largest_dropped = std::max(largest_dropped, r);
        if (r > 0.0 && r >= rank_tol / 10.0 && r <= rank_tol * 10.0)
            ++near;
    }
    basis.smallest_kept_residual = ortho.kept.empty() ? 0.0 : smallest_kept;
    basis.largest_dropped_residual = largest_dropped;
    if (near > 0) {
        std::ostringstream msg;
        msg << near << " generator residual(s) within 10x of rank_tol " << rank_tol
            << "; dim K = " << basis.dim() << " may be tolerance-sensitive";
        basis.warnings.push_back(msg.str());
    }
    return basis;
}

TracelessReport verify_traceless(std::span<const ComplexMatrix> operators, double tol) {
    TracelessReport report;
    for (const auto &a : operators) {
        report.traces.push_back(std::abs(a.trace()));
        report.hermiticity.push_back(hermitian_deviation(a));
        if (report.traces.back() > tol || report.hermiticity.back() > tol)
            report.pass = false;
    }
    return report;
}

TracelessReport verify_traceless(const KSpaceBasis &basis, double tol) {
    return verify_traceless(std::span<const ComplexMatrix>(basis.operators), tol);
}

OrthogonalityCertificate certificate(const KSpaceBasis &basis, const OperatorRep &rep,
                                     const ComplexVector &g) {
    OrthogonalityCertificate cert;
    for (const auto &a : basis.operators)
        cert.max_form = std::max(cert.max_form, std::abs(g.dot(a * g)));
    std::vector<ComplexVector> images;
    for (const auto &x : rep.matrices)
        images.push_back(x * g);
    for (std::size_t l = 0; l < images.size(); ++l)
        for (std::size_t m = l + 1; m < images.size(); ++m)
            cert.max_cross_overlap =
                std::max(cert.max_cross_overlap, std::abs(images[l].dot(images[m])));
    return cert;
}

} // namespace locc
