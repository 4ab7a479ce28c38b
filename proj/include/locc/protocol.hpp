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
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "locc/basis_builder.hpp"
#include "locc/states.hpp"

namespace locc {

inline const std::string kInconclusive = "INCONCLUSIVE";

/// One of Alice's projectors for a given Bob outcome: |v><v| identifies `label`.
struct Branch {
    std::string label;
    ComplexVector vector; // unit, in H_A
};

struct ProtocolMeta {
    std::uint64_t seed = 0;
    double zero_tol = 1e-10;
    double ortho_tol = 1e-8;
    double rank_tol = 1e-8;
    double support_tol = 1e-9;
};

/// Two-round protocol. Bob measures in the columns of `bob_basis` (J g_k) and
/// announces k. For k >= error_slots (0-based) Alice measures
/// {|v><v|}_{branches[k]} plus the remainder projector; branch j names
/// branches[k][j].label, the remainder and every k < error_slots are
/// INCONCLUSIVE.
struct Protocol {
    std::size_t dim_a = 0;
    std::size_t dim_b = 0;
    std::size_t error_slots = 0;
    ComplexMatrix bob_basis;
    std::vector<std::vector<Branch>> branches; // one list per Bob outcome
    ProtocolMeta meta;

    /// Verdict for Bob outcome k and Alice branch (nullopt = remainder).
    const std::string &verdict(std::size_t k, std::optional<std::size_t> branch) const;
};

struct CompileOptions {
    double support_tol = 1e-9;
    double verify_tol = 1e-9;   // basis check
    double overlap_tol = 1e-8;  // branch orthonormality
    ProtocolMeta meta;
};

/// Diagnostics produced while compiling.
struct CompileSummary {
    double basis_residual = 0.0;
    double basis_gram_deviation = 0.0;
    double max_branch_overlap = 0.0;
    double reconstruction_error = 0.0;
};

/// Throws BasisNotVerified when the basis fails verify_basis at verify_tol or
/// the branch vectors of some k are not orthonormal to overlap_tol.
Protocol compile_protocol(const StateFamily &family, const OperatorRep &rep,
                          std::span<const ComplexMatrix> kspace_ops,
                          const DistinguishingBasis &basis, const CompileOptions &options = {},
                          CompileSummary *summary = nullptr);

/// xi_k^l = X_l g_k for all k (columns), per state.
std::vector<ComplexMatrix> conditional_states(const OperatorRep &rep,
                                              const ComplexMatrix &basis_vectors);

/// Per state: sum_{k < error_slots} ||X_l g_k||^2.
std::vector<double> error_mass(const OperatorRep &rep, const ComplexMatrix &basis_vectors,
                               std::size_t error_slots);

/// 1 - max_l sum_{k <= n_p} p_k^l (missing coefficients count as 0).
double discrimination_bound(const SchmidtProfile &profile, std::size_t n_p);

struct BoundReport {
    std::vector<double> error_mass;   // empty unless a basis was given
    std::vector<double> schmidt_sum;
    double mass_bound = 1.0;          // 1 - max error_mass
    double schmidt_bound = 1.0;       // 1 - max schmidt_sum
};

BoundReport bound_report(const SchmidtProfile &profile, std::size_t n_p);
BoundReport bound_report(const SchmidtProfile &profile, const OperatorRep &rep,
                         const DistinguishingBasis &basis);

/// {"dim_a", "dim_b", "n_p", "bob_basis": [[[re, im], ...], ...],
///  "branches": {"k": [{"label", "vector"}, ...]}, "meta": {...}}
/// Branch keys are 1-based Bob outcomes.
nlohmann::json protocol_to_json(const Protocol &protocol);
Protocol protocol_from_json(const nlohmann::json &doc);
Protocol load_protocol_file(const std::filesystem::path &path);

} // namespace locc
