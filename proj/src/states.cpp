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

#include "locc/states.hpp"

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

namespace locc {

std::size_t StateFamily::index_of(const std::string &label) const {
    for (std::size_t i = 0; i < labels.size(); ++i) {
        if (labels[i] == label)
            return i;
    }
    return labels.size();
}

namespace {

void check_orthonormal(const std::vector<ComplexVector> &states, double tol) {
    std::size_t worst_m = 0, worst_l = 0;
    double worst_dev = -1.0;
    Complex worst_overlap = 0.0;
    for (std::size_t m = 0; m < states.size(); ++m) {
        for (std::size_t l = m; l < states.size(); ++l) {
            const Complex overlap = states[m].dot(states[l]);
            const double dev = std::abs(overlap - (m == l ? 1.0 : 0.0));
            if (dev > worst_dev) {
                worst_dev = dev;
                worst_m = m;
                worst_l = l;
                worst_overlap = overlap;
            }
        }
    }
    if (worst_dev > tol) {
        std::ostringstream msg;
        msg << "states " << worst_m + 1 << " and " << worst_l + 1
            << " violate orthonormality: overlap |<psi_m, psi_l>| = "
            << std::abs(worst_overlap) << " (tolerance " << tol << ")";
        throw NotOrthonormal(msg.str(), worst_m, worst_l, std::abs(worst_overlap));
    }
}

} // namespace

StateFamily make_family(std::size_t dim_a, std::size_t dim_b,
                        std::vector<ComplexVector> states,
                        std::vector<std::string> labels,
                        const FamilyOptions &options) {
    if (dim_a == 0 || dim_b == 0)
        throw DimensionMismatch("dim_a and dim_b must be >= 1");
    if (states.size() < 2)
        throw ParseError("a family needs at least two states");
    const auto len = static_cast<Eigen::Index>(dim_a * dim_b);
    for (std::size_t l = 0; l < states.size(); ++l) {
        if (states[l].size() != len) {
            throw DimensionMismatch("state " + std::to_string(l + 1) + " has " +
                                    std::to_string(states[l].size()) +
                                    " amplitudes, expected dim_a*dim_b = " +
                                    std::to_string(len));
        }
        if (!states[l].allFinite())
            throw ParseError("state " + std::to_string(l + 1) + " has non-finite amplitudes");
    }
    if (labels.empty()) {
        for (std::size_t l = 0; l < states.size(); ++l)
            labels.push_back("psi_" + std::to_string(l + 1));
    }
    if (labels.size() != states.size())
        throw ParseError("labels count does not match states count");
    if (std::set<std::string>(labels.begin(), labels.end()).size() != labels.size())
        throw ParseError("labels must be unique");
    for (const auto &label : labels) {
        if (label == "INCONCLUSIVE")
            throw ParseError("label INCONCLUSIVE is reserved");
    }

    StateFamily family{dim_a, dim_b, std::move(states), std::move(labels), false};
    if (options.reorthonormalize) {
        const auto ortho = gram_schmidt(std::span<const ComplexVector>(family.states), 1e-8);
        if (ortho.rank() != family.size()) {
            throw NotOrthonormal("states are linearly dependent; cannot reorthonormalize",
                                 0, 0, 1.0);
        }
        double change = 0.0;
        for (std::size_t l = 0; l < family.size(); ++l)
            change = std::max(change, (ortho.basis[l] - family.states[l]).norm());
        family.states = ortho.basis;
        family.reorthonormalized = change > 0.0;
    }
    check_orthonormal(family.states, options.ortho_tol);
    return family;
}

ComplexVector vector_from_json(const nlohmann::json &j) {
    if (!j.is_array())
        throw ParseError("expected an array of [re, im] pairs");
    ComplexVector v(static_cast<Eigen::Index>(j.size()));
    for (std::size_t i = 0; i < j.size(); ++i) {
        const auto &entry = j[i];
        if (entry.is_number()) {
            v[static_cast<Eigen::Index>(i)] = Complex(entry.get<double>(), 0.0);
        } else if (entry.is_array() && entry.size() == 2 && entry[0].is_number() &&
                   entry[1].is_number()) {
            v[static_cast<Eigen::Index>(i)] =
                Complex(entry[0].get<double>(), entry[1].get<double>());
        } else {
            throw ParseError("amplitude " + std::to_string(i) + " is not [re, im]");
        }
    }
    return v;
}

nlohmann::json vector_to_json(const ComplexVector &v) {
    auto out = nlohmann::json::array();
    for (Eigen::Index i = 0; i < v.size(); ++i)
        out.push_back({v[i].real(), v[i].imag()});
    return out;
}

StateFamily load_family(std::istream &in, const FamilyOptions &options) {
    nlohmann::json doc;
    try {
        in >> doc;
    } catch (const nlohmann::json::exception &e) {
        throw ParseError(std::string("state file is not valid JSON: ") + e.what());
    }
    if (!doc.is_object())
        throw ParseError("state file must be a JSON object");
    for (const char *key : {"dim_a", "dim_b", "states"}) {
        if (!doc.contains(key))
            throw ParseError(std::string("state file is missing \"") + key + "\"");
    }
    if (!doc["dim_a"].is_number_unsigned() || !doc["dim_b"].is_number_unsigned())
        throw ParseError("dim_a and dim_b must be positive integers");
    if (!doc["states"].is_array())
        throw ParseError("\"states\" must be an array");

    std::vector<ComplexVector> states;
    for (const auto &s : doc["states"])
        states.push_back(vector_from_json(s));
    std::vector<std::string> labels;
    if (doc.contains("labels")) {
        try {
            labels = doc["labels"].get<std::vector<std::string>>();
        } catch (const nlohmann::json::exception &) {
            throw ParseError("\"labels\" must be an array of strings");
        }
    }
    return make_family(doc["dim_a"].get<std::size_t>(), doc["dim_b"].get<std::size_t>(),
                       std::move(states), std::move(labels), options);
}

StateFamily load_family_file(const std::filesystem::path &path,
                             const FamilyOptions &options) {
    std::ifstream in(path);
    if (!in)
        throw ParseError("cannot open state file " + path.string());
    return load_family(in, options);
}

nlohmann::json family_to_json(const StateFamily &family) {
    nlohmann::json doc;
    doc["dim_a"] = family.dim_a;
    doc["dim_b"] = family.dim_b;
    doc["labels"] = family.labels;
    doc["states"] = nlohmann::json::array();
    for (const auto &s : family.states)
        doc["states"].push_back(vector_to_json(s));
    return doc;
}

ComplexMatrix to_operator(const ComplexVector &psi, std::size_t dim_a,
                          std::size_t dim_b) {
    if (static_cast<std::size_t>(psi.size()) != dim_a * dim_b)
        throw DimensionMismatch("to_operator: len(psi) != dim_a * dim_b");
    const auto rows = static_cast<Eigen::Index>(dim_a);
    const auto cols = static_cast<Eigen::Index>(dim_b);
    ComplexMatrix x(rows, cols);
    for (Eigen::Index a = 0; a < rows; ++a)
        for (Eigen::Index b = 0; b < cols; ++b)
            x(a, b) = psi[a * cols + b];
    return x;
}

ComplexVector from_operator(const ComplexMatrix &x) {
    ComplexVector psi(x.rows() * x.cols());
    for (Eigen::Index a = 0; a < x.rows(); ++a)
        for (Eigen::Index b = 0; b < x.cols(); ++b)
            psi[a * x.cols() + b] = x(a, b);
    return psi;
}

OperatorRep operator_rep(const StateFamily &family) {
    OperatorRep rep;
    rep.matrices.reserve(family.size());
    for (const auto &psi : family.states)
        rep.matrices.push_back(to_operator(psi, family.dim_a, family.dim_b));
    return rep;
}

SchmidtProfile schmidt_profile(const StateFamily &family) {
    SchmidtProfile profile;
    for (const auto &psi : family.states) {
        const auto dec = svd(to_operator(psi, family.dim_a, family.dim_b));
        profile.probabilities.push_back(dec.singulars.array().square().matrix());
    }
    return profile;
}

ComplexVector conjugate_J(const ComplexVector &v) { return v.conjugate(); }

} // namespace locc
