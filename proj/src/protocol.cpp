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

#include "locc/protocol.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>

namespace locc {

const std::string &Protocol::verdict(std::size_t k, std::optional<std::size_t> branch) const {
    if (k < error_slots || !branch || k >= branches.size() || *branch >= branches[k].size())
        return kInconclusive;
    return branches[k][*branch].label;
}

std::vector<ComplexMatrix> conditional_states(const OperatorRep &rep,
                                              const ComplexMatrix &basis_vectors) {
    std::vector<ComplexMatrix> xi;
    xi.reserve(rep.matrices.size());
    for (const auto &x : rep.matrices) {
        if (x.cols() != basis_vectors.rows())
            throw DimensionMismatch("conditional_states: basis does not live in H_B");
        xi.push_back(x * basis_vectors);
    }
    return xi;
}

Protocol compile_protocol(const StateFamily &family, const OperatorRep &rep,
                          std::span<const ComplexMatrix> kspace_ops,
                          const DistinguishingBasis &basis, const CompileOptions &options,
                          CompileSummary *summary) {
    if (rep.matrices.size() != family.size())
        throw DimensionMismatch("compile_protocol: operator count differs from family size");
    if (basis.dim() != family.dim_b || basis.vectors.rows() != basis.vectors.cols())
        throw DimensionMismatch("compile_protocol: basis dimension differs from dim_b");

    CompileSummary local;
    const auto check = verify_basis(kspace_ops, basis, options.verify_tol);
    local.basis_residual = check.max_residual;
    local.basis_gram_deviation = check.gram_deviation;
    if (!check.pass) {
        throw BasisNotVerified("compile_protocol: basis residual " +
                               std::to_string(check.max_residual) + ", Gram deviation " +
                               std::to_string(check.gram_deviation));
    }

    Protocol protocol;
    protocol.dim_a = family.dim_a;
    protocol.dim_b = family.dim_b;
    protocol.error_slots = basis.error_slots;
    protocol.bob_basis = basis.vectors.conjugate();
    protocol.meta = options.meta;
    protocol.meta.support_tol = options.support_tol;

    const auto xi = conditional_states(rep, basis.vectors);
    protocol.branches.resize(basis.dim());
    for (std::size_t k = basis.error_slots; k < basis.dim(); ++k) {
        auto &list = protocol.branches[k];
        for (std::size_t l = 0; l < family.size(); ++l) {
            const ComplexVector v = xi[l].col(static_cast<Eigen::Index>(k));
            const double norm = v.norm();
            if (norm > options.support_tol)
                list.push_back({family.labels[l], v / norm});
        }
        for (std::size_t i = 0; i < list.size(); ++i)
            for (std::size_t j = i + 1; j < list.size(); ++j)
                local.max_branch_overlap =
                    std::max(local.max_branch_overlap, std::abs(list[i].vector.dot(list[j].vector)));
    }
    if (local.max_branch_overlap > options.overlap_tol) {
        throw BasisNotVerified("compile_protocol: Alice's branch vectors overlap by " +
                               std::to_string(local.max_branch_overlap));
    }

    // sum_k xi_k^l (x) J g_k must give back psi_l.
    for (std::size_t l = 0; l < family.size(); ++l) {
        const ComplexMatrix rebuilt = xi[l] * protocol.bob_basis.transpose();
        local.reconstruction_error =
            std::max(local.reconstruction_error, (rebuilt - rep.matrices[l]).norm());
    }
    if (summary)
        *summary = local;
    return protocol;
}

std::vector<double> error_mass(const OperatorRep &rep, const ComplexMatrix &basis_vectors,
                               std::size_t error_slots) {
    std::vector<double> mass;
    for (const auto &x : rep.matrices) {
        if (x.cols() != basis_vectors.rows())
            throw DimensionMismatch("error_mass: basis does not live in H_B");
        const auto slots = static_cast<Eigen::Index>(std::min<std::size_t>(
            error_slots, static_cast<std::size_t>(basis_vectors.cols())));
        mass.push_back((x * basis_vectors.leftCols(slots)).squaredNorm());
    }
    return mass;
}

namespace {

std::vector<double> schmidt_sums(const SchmidtProfile &profile, std::size_t n_p) {
    std::vector<double> sums;
    for (const auto &p : profile.probabilities) {
        const auto take = std::min<Eigen::Index>(static_cast<Eigen::Index>(n_p), p.size());
        sums.push_back(p.head(take).sum());
    }
    return sums;
}

double one_minus_max(const std::vector<double> &values) {
    if (values.empty())
        return 1.0;
    return 1.0 - *std::max_element(values.begin(), values.end());
}

} // namespace

double discrimination_bound(const SchmidtProfile &profile, std::size_t n_p) {
    return one_minus_max(schmidt_sums(profile, n_p));
}

BoundReport bound_report(const SchmidtProfile &profile, std::size_t n_p) {
    BoundReport report;
    report.schmidt_sum = schmidt_sums(profile, n_p);
    report.schmidt_bound = one_minus_max(report.schmidt_sum);
    return report;
}

BoundReport bound_report(const SchmidtProfile &profile, const OperatorRep &rep,
                         const DistinguishingBasis &basis) {
    BoundReport report = bound_report(profile, basis.error_slots);
    report.error_mass = error_mass(rep, basis.vectors, basis.error_slots);
    report.mass_bound = one_minus_max(report.error_mass);
    return report;
}

nlohmann::json protocol_to_json(const Protocol &protocol) {
    nlohmann::json doc;
    doc["dim_a"] = protocol.dim_a;
    doc["dim_b"] = protocol.dim_b;
    doc["n_p"] = protocol.error_slots;
    doc["bob_basis"] = nlohmann::json::array();
    for (Eigen::Index k = 0; k < protocol.bob_basis.cols(); ++k)
        doc["bob_basis"].push_back(vector_to_json(protocol.bob_basis.col(k)));
    doc["branches"] = nlohmann::json::object();
    for (std::size_t k = 0; k < protocol.branches.size(); ++k) {
        auto list = nlohmann::json::array();
        for (const auto &b : protocol.branches[k])
            list.push_back({{"label", b.label}, {"vector", vector_to_json(b.vector)}});
        doc["branches"][std::to_string(k + 1)] = list;
    }
    doc["meta"] = {{"seed", protocol.meta.seed},
                   {"tolerances",
                    {{"zero_tol", protocol.meta.zero_tol},
                     {"ortho_tol", protocol.meta.ortho_tol},
                     {"rank_tol", protocol.meta.rank_tol},
                     {"support_tol", protocol.meta.support_tol}}}};
    return doc;
}

Protocol protocol_from_json(const nlohmann::json &doc) {
    try {
        Protocol p;
        p.dim_a = doc.at("dim_a").get<std::size_t>();
        p.dim_b = doc.at("dim_b").get<std::size_t>();
        p.error_slots = doc.at("n_p").get<std::size_t>();
        const auto &bob = doc.at("bob_basis");
        if (bob.size() != p.dim_b)
            throw ParseError("protocol: bob_basis must hold dim_b vectors");
        const auto d = static_cast<Eigen::Index>(p.dim_b);
        p.bob_basis = ComplexMatrix(d, d);
        for (Eigen::Index k = 0; k < d; ++k) {
            const auto v = vector_from_json(bob[static_cast<std::size_t>(k)]);
            if (v.size() != d)
                throw ParseError("protocol: bob_basis vector has the wrong length");
            p.bob_basis.col(k) = v;
        }
        p.branches.resize(p.dim_b);
        for (const auto &[key, list] : doc.at("branches").items()) {
            const auto k = std::stoul(key);
            if (k < 1 || k > p.dim_b)
                throw ParseError("protocol: branch key " + key + " out of range");
            for (const auto &entry : list) {
                Branch b{entry.at("label").get<std::string>(),
                         vector_from_json(entry.at("vector"))};
                if (static_cast<std::size_t>(b.vector.size()) != p.dim_a)
                    throw ParseError("protocol: branch vector has the wrong length");
                p.branches[k - 1].push_back(std::move(b));
            }
        }
        if (doc.contains("meta")) {
            const auto &meta = doc["meta"];
            p.meta.seed = meta.value("seed", std::uint64_t{0});
            if (meta.contains("tolerances")) {
                const auto &t = meta["tolerances"];
                p.meta.zero_tol = t.value("zero_tol", p.meta.zero_tol);
                p.meta.ortho_tol = t.value("ortho_tol", p.meta.ortho_tol);
                p.meta.rank_tol = t.value("rank_tol", p.meta.rank_tol);
                p.meta.support_tol = t.value("support_tol", p.meta.support_tol);
            }
        }
        return p;
    } catch (const nlohmann::json::exception &e) {
        throw ParseError(std::string("protocol file: ") + e.what());
    } catch (const std::invalid_argument &) {
        throw ParseError("protocol file: branch keys must be integers");
    }
}

Protocol load_protocol_file(const std::filesystem::path &path) {
    std::ifstream in(path);
    if (!in)
        throw ParseError("cannot open protocol file " + path.string());
    nlohmann::json doc;
    try {
        in >> doc;
    } catch (const nlohmann::json::exception &e) {
        throw ParseError(std::string("protocol file is not valid JSON: ") + e.what());
    }
    return protocol_from_json(doc);
}

} // namespace locc
