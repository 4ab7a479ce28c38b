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

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

#include <gtest/gtest.h>

#include "locc/basis_builder.hpp"
#include "locc/kspace.hpp"
#include "oracles/instances.hpp"

using namespace locc;
using namespace locc::testing;

namespace {

OperatorRep rep_of(std::vector<ComplexVector> states, std::size_t da = 2, std::size_t db = 2) {
    return operator_rep(make_family(da, db, std::move(states)));
}

// Residual of projecting m onto the real span of an HS-orthonormal Hermitian basis.
double span_residual(const ComplexMatrix &m, const std::vector<ComplexMatrix> &basis) {
    ComplexMatrix r = m;
    for (const auto &a : basis)
        r -= hs_inner(a, m).real() * a;
    return r.norm();
}

} // namespace

TEST(GramOperators, BellPair) {
    const auto g = gram_operators(rep_of({phi_plus(), phi_minus()}));
    EXPECT_LE((g.at(0, 1) - pauli_z() / 2.0).norm(), 1e-15);
    EXPECT_NEAR(g.at(0, 0).trace().real(), 1.0, 1e-15);
}

TEST(GramOperators, ProductPairVanishes) {
    const auto g = gram_operators(rep_of({product_state(0, 0, 2, 2), product_state(1, 1, 2, 2)}));
    EXPECT_EQ(g.at(0, 1), ComplexMatrix::Zero(2, 2));
}

TEST(GramOperators, TracesAreKronecker) {
    Rng rng(4);
    const auto f = random_family(3, 4, 4, rng);
    const auto g = gram_operators(operator_rep(f));
    for (std::size_t m = 0; m < 4; ++m) {
        for (std::size_t l = 0; l < 4; ++l) {
            EXPECT_NEAR(std::abs(g.at(m, l).trace() - Complex(m == l ? 1.0 : 0.0)), 0.0, 1e-8);
            ASSERT_EQ(g.at(m, l).rows(), 4);
        }
        EXPECT_LE(hermitian_deviation(g.at(m, m)), 1e-14);
        EXPECT_GE(hermitian_eig(g.at(m, m)).values.minCoeff(), -1e-12);
    }
}

TEST(BuildKSpace, BellPairGivesSigmaZ) {
    const auto k = build_kspace(rep_of({phi_plus(), phi_minus()}));
    ASSERT_EQ(k.dim(), 1u);
    EXPECT_EQ(k.generator_count, 2u);
    // up to sign
    const double s = k.operators[0](0, 0).real() > 0 ? 1.0 : -1.0;
    EXPECT_LE((s * k.operators[0] - pauli_z() / std::sqrt(2.0)).norm(), 1e-12);
}

TEST(BuildKSpace, ThreeBellSpansPaulis) {
    const auto k = build_kspace(rep_of({phi_plus(), phi_minus(), psi_plus()}));
    ASSERT_EQ(k.dim(), 3u);
    EXPECT_EQ(k.generator_count, 6u);
    for (const auto &p : {pauli_x(), pauli_y(), pauli_z()})
        EXPECT_LE(span_residual(p / std::sqrt(2.0), k.operators), 1e-12);
}

TEST(BuildKSpace, ProductPairIsEmpty) {
    const auto k = build_kspace(rep_of({product_state(0, 0, 2, 2), product_state(1, 1, 2, 2)}));
    EXPECT_EQ(k.dim(), 0u);
    EXPECT_TRUE(verify_traceless(k, 1e-10).pass);
}

TEST(BuildKSpace, NeedsTwoStates) {
    OperatorRep rep;
    rep.matrices.push_back(ComplexMatrix::Identity(2, 2));
    EXPECT_THROW(build_kspace(rep), PreconditionViolated);
}

TEST(BuildKSpace, ConclusiveFamilyHasDimensionThree) {
    EXPECT_EQ(build_kspace(operator_rep(conclusive_family())).dim(), 3u);
}

TEST(BuildKSpace, NearThresholdRankWarns) {
    // X_1 = I/sqrt2, X_2 ~ sigma_z + i eps sigma_x: generators sigma_z and -eps sigma_x,
    // so the second direction sits at relative size eps.
    const double eps = 3e-8;
    const double h = 1.0 / std::sqrt(2.0);
    const double nb = h / std::sqrt(1.0 + eps * eps);
    ComplexVector b(4);
    b << nb, Complex(0, eps * nb), Complex(0, eps * nb), -nb;
    const auto k = build_kspace(rep_of({phi_plus(), b}), 1e-8);
    EXPECT_EQ(k.dim(), 2u);
    EXPECT_FALSE(k.warnings.empty());
    EXPECT_TRUE(build_kspace(rep_of({phi_plus(), phi_minus()}), 1e-8).warnings.empty());
}

TEST(BuildKSpace, BasisInvariantsOnRandomFamilies) {
    Rng rng(7);
    for (int rep = 0; rep < 30; ++rep) {
        const std::size_t da = 2 + rep % 3, db = 2 + (rep / 3) % 4, m = 2 + rep % 3;
        if (m > da * db)
            continue;
        const auto r = operator_rep(random_family(da, db, m, rng));
        const auto k = build_kspace(r);
        EXPECT_LE(k.dim(), m * (m - 1));
        EXPECT_LE(k.dim(), db * db - 1);
        EXPECT_TRUE(verify_traceless(k, 1e-10).pass);
        for (std::size_t i = 0; i < k.dim(); ++i)
            for (std::size_t j = 0; j < k.dim(); ++j)
                EXPECT_NEAR(std::abs(hs_inner(k.operators[i], k.operators[j]) -
                                     Complex(i == j ? 1.0 : 0.0)),
                            0.0, 1e-10);

        // span correctness
        for (const auto &gen : kspace_generators(r))
            EXPECT_LE(span_residual(gen, k.operators), 1e-7 * std::max(1.0, gen.norm()));

        // real linear combinations stay Hermitian and traceless
        std::uniform_real_distribution<double> coeff(-1.0, 1.0);
        ComplexMatrix comb = ComplexMatrix::Zero(static_cast<Eigen::Index>(db),
                                                 static_cast<Eigen::Index>(db));
        for (const auto &a : k.operators)
            comb += coeff(rng) * a;
        EXPECT_LE(hermitian_deviation(comb), 1e-9);
        EXPECT_LE(std::abs(comb.trace()), 1e-9);
    }
}

TEST(BuildKSpace, DimensionInvariantUnderRelabeling) {
    Rng rng(9);
    for (int rep = 0; rep < 10; ++rep) {
        auto f = random_family(3, 3, 4, rng);
        const auto n = build_kspace(operator_rep(f)).dim();
        std::vector<ComplexVector> perm = f.states;
        std::shuffle(perm.begin(), perm.end(), rng);
        EXPECT_EQ(build_kspace(operator_rep(make_family(3, 3, perm))).dim(), n);
    }
}

TEST(VerifyTraceless, FlagsInjectedTrace) {
    std::vector<ComplexMatrix> ops{pauli_z(), ComplexMatrix::Identity(2, 2) * 0.05};
    const auto rep = verify_traceless(std::span<const ComplexMatrix>(ops), 1e-10);
    EXPECT_FALSE(rep.pass);
    EXPECT_NEAR(rep.traces[1], 0.1, 1e-15);
    EXPECT_NEAR(rep.traces[0], 0.0, 1e-15);
}

TEST(VerifyTraceless, EmptyPasses) {
    std::vector<ComplexMatrix> ops;
    EXPECT_TRUE(verify_traceless(std::span<const ComplexMatrix>(ops), 1e-10).pass);
}

TEST(Certificate, FormsVanishIffCrossOverlapsVanish) {
    Rng rng(15);
    for (int rep = 0; rep < 20; ++rep) {
        const std::size_t db = 2 + rep % 4;
        const auto r = operator_rep(random_family(3, db, 2, rng));
        const auto k = build_kspace(r);
        // random vectors: both sides generically nonzero
        const auto g = random_unit_vector(db, rng);
        const auto c = certificate(k, r, g);
        EXPECT_EQ(c.max_form > 1e-8, c.max_cross_overlap > 1e-8);
        // basis vectors: both sides vanish
        const auto basis = build_distinguishing_basis(k.operators, db, 0);
        for (std::size_t j = 0; j < basis.dim(); ++j) {
            const auto cj = certificate(k, r, basis.vectors.col(static_cast<Eigen::Index>(j)));
            EXPECT_LE(cj.max_form, 1e-8);
            EXPECT_LE(cj.max_cross_overlap, 1e-8);
        }
    }
}
