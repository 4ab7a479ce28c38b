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
#include <filesystem>
#include <istream>
#include <string>
#include <vector>

#include "json.hpp"

#include "locc/numerics.hpp"

namespace locc {

/// M orthonormal vectors of C^{dim_a} (x) C^{dim_b}. Amplitudes are stored
/// A-major: index = a * dim_b + b. The B-side product basis is the
/// computational basis; conjugate_J acts in it.
struct StateFamily {
    std::size_t dim_a = 0;
    std::size_t dim_b = 0;
    std::vector<ComplexVector> states;
    std::vector<std::string> labels;
    bool reorthonormalized = false;

    std::size_t size() const { return states.size(); }
    /// Position of `label`, or size() when absent.
    std::size_t index_of(const std::string &label) const;
};

struct FamilyOptions {
    double ortho_tol = 1e-8;
    /// Apply Gram-Schmidt instead of rejecting a non-orthonormal family.
    bool reorthonormalize = false;
};

/// Validates and assembles a family. Missing labels default to psi_1..psi_M.
StateFamily make_family(std::size_t dim_a, std::size_t dim_b,
                        std::vector<ComplexVector> states,
                        std::vector<std::string> labels = {},
                        const FamilyOptions &options = {});

/// Reads the JSON state file:
///   {"dim_a": int, "dim_b": int, "states": [[[re, im], ...], ...],
///    "labels": [string, ...]}
StateFamily load_family(std::istream &in, const FamilyOptions &options = {});
StateFamily load_family_file(const std::filesystem::path &path,
                             const FamilyOptions &options = {});
nlohmann::json family_to_json(const StateFamily &family);

/// X[a][b] = psi[a * dim_b + b], i.e. psi = sum_i (X f_i) (x) f_i.
ComplexMatrix to_operator(const ComplexVector &psi, std::size_t dim_a,
                          std::size_t dim_b);
ComplexVector from_operator(const ComplexMatrix &x);

struct OperatorRep {
    std::vector<ComplexMatrix> matrices; // each dim_a x dim_b
};

OperatorRep operator_rep(const StateFamily &family);

/// Per state: squared singular values of X_l, descending, min(dim_a, dim_b)
/// entries.
struct SchmidtProfile {
    std::vector<RealVector> probabilities;
};

SchmidtProfile schmidt_profile(const StateFamily &family);

/// Complex conjugation in the computational basis of H_B.
ComplexVector conjugate_J(const ComplexVector &v);

/// JSON helpers for [[re, im], ...] arrays.
nlohmann::json vector_to_json(const ComplexVector &v);
ComplexVector vector_from_json(const nlohmann::json &j);

} // namespace locc
