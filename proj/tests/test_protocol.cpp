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
#include <vector>

#include <gtest/gtest.h>

#include "locc/basis_builder.hpp"
#include "locc/kspace.hpp"
#include "locc/protocol.hpp"
#include "oracles/instances.hpp"

using namespace locc;
using namespace locc::testing;

namespace {

const double kH = 1.0 / std::sqrt(2.0);

struct Compiled {
    OperatorRep rep;
    KSpaceBasis kspace;
    DistinguishingBasis basis;
    Protocol protocol;
    CompileSummary summary;
};

Compiled compile(const StateFamily &f, std::uint64_t seed = 0) {
    Compiled c;
    c.rep = operator_rep(f);
    c.kspace = build_kspace(c.rep);
    BasisOptions opts;
    opts.seed = seed;
    c.basis = build_distinguishing_basis(c.kspace.operators, f.dim_b,
                                         error_slots_for(c.kspace.dim()), opts);
    c.protocol = compile_protocol(f, c.rep, c.kspace.operators, c.basis, {}, &c.summary);
    return c;
}

} // namespace

TEST(CompileProtocol, TwoBellStates) {
    const auto f = make_family(2, 2, {phi_plus(), phi_minus()});
    const auto c = compile(f);
    EXPECT_EQ(c.protocol.error_slots, 0u);
    ASSERT_EQ(c.protocol.branches.size(), 2u);
    for (std::size_t k = 0; k < 2; ++k) {
        ASSERT_EQ(c.protocol.branches[k].size(), 2u);
        const auto &b = c.protocol.branches[k];
        EXPECT_LE(std::abs(b[0].vector.dot(b[1].vector)), 1e-12);
        // Bob's outcomes are balanced over the computational basis
        for (Eigen::Index i = 0; i < 2; ++i)
            EXPECT_NEAR(std::abs(c.protocol.bob_basis(i, static_cast<Eigen::Index>(k))), kH, 1e-12);
    }
    // hand computation for the real basis (1, 1)/sqrt2: xi^1 = (1, 1)/2, xi^2 = (1, -1)/2
    ComplexVector g(2);
    g << kH, kH;
    EXPECT_LE((c.rep.matrices[0] * g - ComplexVector::Constant(2, 0.5)).norm(), 1e-15);
    ComplexVector expect(2);
    expect << 0.5, -0.5;
    EXPECT_LE((c.rep.matrices[1] * g - expect).norm(), 1e-15);
    EXPECT_LE(c.summary.reconstruction_error, 1e-10);
}

TEST(CompileProtocol, ProductPairUsesComputationalBasis) {
    const auto f = make_family(2, 2, {product_state(0, 0, 2, 2), product_state(1, 1, 2, 2)},
                               {"ket_00", "ket_11"});
    const auto c = compile(f);
    EXPECT_EQ(c.protocol.bob_basis, ComplexMatrix::Identity(2, 2));
    ASSERT_EQ(c.protocol.branches[0].size(), 1u);
    ASSERT_EQ(c.protocol.branches[1].size(), 1u);
    EXPECT_EQ(c.protocol.branches[0][0].label, "ket_00");
    EXPECT_EQ(c.protocol.branches[1][0].label, "ket_11");
}

TEST(CompileProtocol, ThreeBellStatesAllInconclusive) {
    const auto f = make_family(2, 2, {phi_plus(), phi_minus(), psi_plus()});
    const auto c = compile(f);
    EXPECT_EQ(c.protocol.error_slots, 2u);
    for (std::size_t k = 0; k < 2; ++k) {
        EXPECT_TRUE(c.protocol.branches[k].empty());
        EXPECT_EQ(c.protocol.verdict(k, 0), kInconclusive);
        EXPECT_EQ(c.protocol.verdict(k, std::nullopt), kInconclusive);
    }
}

TEST(CompileProtocol, RejectsUnverifiedBasis) {
    const auto f = make_family(2, 2, {phi_plus(), phi_minus()});
    const auto rep = operator_rep(f);
    const auto k = build_kspace(rep);
    DistinguishingBasis bad;
    bad.vectors = ComplexMatrix::Identity(2, 2);
    EXPECT_THROW(compile_protocol(f, rep, k.operators, bad), BasisNotVerified);
}

TEST(CompileProtocol, RandomFamilyInvariants) {
    Rng rng(61);
    for (int rep = 0; rep < 15; ++rep) {
        const std::size_t da = 2 + rep % 4, db = 2 + (rep / 2) % 4;
        const std::size_t m = 2 + rep % 2;
        const auto f = random_family(da, db, m, rng);
        Compiled c;
        try {
            c = compile(f, static_cast<std::uint64_t>(rep));
        } catch (const UnsupportedRegime &) {
            continue; // N >= 4
        }
        EXPECT_LE(gram_deviation(c.protocol.bob_basis), 1e-10);
        EXPECT_LE(c.summary.reconstruction_error, 1e-10);
        for (std::size_t k = c.protocol.error_slots; k < db; ++k) {
            const auto &list = c.protocol.branches[k];
            ComplexMatrix proj = ComplexMatrix::Zero(static_cast<Eigen::Index>(da),
                                                     static_cast<Eigen::Index>(da));
            for (std::size_t i = 0; i < list.size(); ++i) {
                EXPECT_NEAR(list[i].vector.norm(), 1.0, 1e-12);
                proj += list[i].vector * list[i].vector.adjoint();
                for (std::size_t j = i + 1; j < list.size(); ++j)
                    EXPECT_LE(std::norm(list[i].vector.dot(list[j].vector)), 1e-16);
            }
            // the branch projectors plus the remainder resolve the identity
            const ComplexMatrix rest = ComplexMatrix::Identity(proj.rows(), proj.cols()) - proj;
            EXPECT_LE((rest * rest - rest).norm(), 1e-8);
        }
        const auto report = bound_report(schmidt_profile(f), c.rep, c.basis);
        for (std::size_t l = 0; l < m; ++l) {
            EXPECT_GE(report.error_mass[l], -1e-15);
            EXPECT_LE(report.error_mass[l], report.schmidt_sum[l] + 1e-8);
        }
        EXPECT_GE(report.mass_bound, report.schmidt_bound - 1e-8);
        if (m == 2) {
            EXPECT_EQ(c.protocol.error_slots, 0u);
            EXPECT_NEAR(report.mass_bound, 1.0, 0.0);
        }
    }
}

TEST(DiscriminationBound, Examples) {
    const auto bell = make_family(2, 2, {phi_plus(), phi_minus(), psi_plus()});
    EXPECT_LE(std::abs(discrimination_bound(schmidt_profile(bell), 2)), 1e-12);
    EXPECT_DOUBLE_EQ(discrimination_bound(schmidt_profile(bell), 0), 1.0);
    EXPECT_NEAR(discrimination_bound(schmidt_profile(conclusive_family()), 2), 0.3, 1e-12);
}

TEST(ErrorMass, Examples) {
    const auto bell2 = make_family(2, 2, {phi_plus(), phi_minus()});
    for (double m : error_mass(operator_rep(bell2), ComplexMatrix::Identity(2, 2), 0))
        EXPECT_EQ(m, 0.0);
    const auto bell3 = make_family(2, 2, {phi_plus(), phi_minus(), psi_plus()});
    for (double m : error_mass(operator_rep(bell3), ComplexMatrix::Identity(2, 2), 2))
        EXPECT_NEAR(m, 1.0, 1e-14);
}

TEST(ErrorMass, ConclusiveFamilyUnderSchmidtSup) {
    for (int seed = 0; seed < 4; ++seed) {
        Rng rng(static_cast<std::uint64_t>(seed));
        const auto f = conclusive_family(random_unitary(4, rng));
        const auto c = compile(f, static_cast<std::uint64_t>(seed));
        EXPECT_EQ(c.kspace.dim(), 3u);
        const auto report = bound_report(schmidt_profile(f), c.rep, c.basis);
        for (double m : report.error_mass)
            EXPECT_LE(m, 0.7 + 1e-8);
    }
}

TEST(ProtocolJson, RoundTrip) {
    Rng rng(2);
    const auto f = random_family(3, 3, 2, rng);
    auto c = compile(f);
    c.protocol.meta.seed = 99;
    const auto doc = protocol_to_json(c.protocol);
    EXPECT_EQ(doc["branches"].size(), 3u);
    EXPECT_TRUE(doc["branches"].contains("1"));
    const auto back = protocol_from_json(nlohmann::json::parse(doc.dump()));
    EXPECT_EQ(back.bob_basis, c.protocol.bob_basis);
    EXPECT_EQ(back.error_slots, c.protocol.error_slots);
    EXPECT_EQ(back.meta.seed, 99u);
    ASSERT_EQ(back.branches.size(), c.protocol.branches.size());
    for (std::size_t k = 0; k < back.branches.size(); ++k) {
        ASSERT_EQ(back.branches[k].size(), c.protocol.branches[k].size());
        for (std::size_t j = 0; j < back.branches[k].size(); ++j) {
            EXPECT_EQ(back.branches[k][j].label, c.protocol.branches[k][j].label);
            EXPECT_EQ(back.branches[k][j].vector, c.protocol.branches[k][j].vector);
        }
    }
    EXPECT_EQ(protocol_to_json(back).dump(), doc.dump());
}

TEST(ProtocolJson, RejectsBadDocuments) {
    EXPECT_THROW(protocol_from_json(nlohmann::json::parse("{}")), ParseError);
    EXPECT_THROW(protocol_from_json(nlohmann::json::parse(
                     R"({"dim_a": 1, "dim_b": 1, "n_p": 0, "bob_basis": [[[1, 0]]],
                         "branches": {"7": []}})")),
                 ParseError);
    EXPECT_THROW(load_protocol_file("/nonexistent/protocol.json"), ParseError);
}
