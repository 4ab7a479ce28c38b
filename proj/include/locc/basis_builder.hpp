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
#include <span>
#include <vector>

#include "locc/jnr.hpp"
#include "locc/numerics.hpp"

namespace locc {

/// Matrices <b_j, A_i b_k> of each operator over the orthonormal columns of
/// `complement`.
std::vector<ComplexMatrix> compress(std::span<const ComplexMatrix> ops,
                                    const ComplexMatrix &complement);

/// Number of Bob outcomes without an orthogonality guarantee: 0 for N <= 2,
/// 2 for N = 3. Throws UnsupportedRegime for N >= 4.
std::size_t error_slots_for(std::size_t n);

struct DeflationStep {
    std::size_t remaining_dim = 0; // before the step
    ZeroMethod method = ZeroMethod::Trivial;
    bool solved = true;            // false: the dim-1 tail taken without a search
    double residual = 0.0;         // ambient max_i |<g, A_i g>|
    double trace_after = 0.0;      // max_i |Tr| of compressed ops afterwards
};

/// Ordered orthonormal basis g_1..g_dB of H_B (columns of `vectors`).
/// Columns 0..error_slots-1 are the error slots; every later column satisfies
/// <g_k, A_i g_k> ~ 0.
struct DistinguishingBasis {
    ComplexMatrix vectors;
    std::size_t error_slots = 0;
    std::vector<double> residuals; // per column, max_i |<g_k, A_i g_k>|
    std::vector<DeflationStep> steps;
    bool best_effort = false;

    std::size_t dim() const { return static_cast<std::size_t>(vectors.cols()); }
};

struct BasisOptions {
    double zero_tol = 1e-10;
    std::uint64_t seed = 0;
    std::size_t starts = 32;
    std::size_t max_iterations = 200;
    bool parallel = true;
    /// N >= 4: deflate with the unguaranteed optimizer until it fails.
    bool best_effort = false;
};

/// Raised when a deflation step cannot find its zero vector; `partial()` holds
/// the vectors accepted so far (columns, in order found).
class BasisSearchFailed : public SearchFailed {
  public:
    BasisSearchFailed(const std::string &what, ZeroVectorResult best, ComplexMatrix partial)
        : SearchFailed(what, std::move(best)), partial_(std::move(partial)) {}
    const ComplexMatrix &partial() const { return partial_; }

  private:
    ComplexMatrix partial_;
};

/// Greedy deflation: while more than `error_slots` dimensions remain, find a
/// zero vector of the compressed operators, lift it, and restrict to its
/// orthogonal complement. The leftover subspace fills the error slots.
DistinguishingBasis build_distinguishing_basis(std::span<const ComplexMatrix> ops,
                                               std::size_t dim_b, std::size_t error_slots,
                                               const BasisOptions &options = {});

struct BasisReport {
    double max_residual = 0.0;   // over k > error_slots and all i
    double gram_deviation = 0.0;
    bool pass = false;
};

BasisReport verify_basis(std::span<const ComplexMatrix> ops, const DistinguishingBasis &basis,
                         double tol);

} // namespace locc
