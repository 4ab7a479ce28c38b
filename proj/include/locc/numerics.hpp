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

/// Dense complex linear algebra used throughout the pipeline. Matrices and
/// vectors are Eigen types; this header fixes the conventions on top of them
/// (descending spectra, relative rank tolerances, seeded random streams).

#include <complex>
#include <cstddef>
#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "locc/errors.hpp"

namespace locc {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;
using RealMatrix = Eigen::MatrixXd;

/// Random engine used for every stochastic routine. Always passed explicitly.
using Rng = std::mt19937_64;

/// Seed for the independent stream number `index` derived from `seed`.
/// Parallel kernels give work item i the engine Rng(stream_seed(seed, i)),
/// so results do not depend on thread count or scheduling.
std::uint64_t stream_seed(std::uint64_t seed, std::uint64_t index);

struct EigenDecomposition {
    RealVector values;    // descending
    ComplexMatrix vectors; // column j pairs with values[j]
};

/// Eigendecomposition of a Hermitian matrix. Throws NotHermitian when
/// max |A - A*| exceeds `hermitian_tol`, NoConvergence if the solver fails.
EigenDecomposition hermitian_eig(const ComplexMatrix &a,
                                 double hermitian_tol = 1e-10);

struct SingularValueDecomposition {
    ComplexMatrix left;  // rows x r
    RealVector singulars; // r = min(rows, cols), descending
    ComplexMatrix right; // cols x r;  X = left * diag(singulars) * right^*
};

SingularValueDecomposition svd(const ComplexMatrix &x);

/// Hilbert-Schmidt inner product Tr(A^* B).
Complex hs_inner(const ComplexMatrix &a, const ComplexMatrix &b);

/// max_ij |A_ij - conj(A_ji)|
double hermitian_deviation(const ComplexMatrix &a);

/// Result of orthonormalizing a list. `kept[j]` is the input index that
/// produced `basis[j]`; `residuals[i]` is the residual norm of input i after
/// projection, divided by the largest input norm.
template <typename T> struct OrthonormalSet {
    std::vector<T> basis;
    std::vector<std::size_t> kept;
    std::vector<double> residuals;
    std::size_t rank() const { return basis.size(); }
};

/// Modified Gram-Schmidt (two passes) under the standard inner product.
/// Inputs whose relative residual falls below `rank_tol` are dropped.
OrthonormalSet<ComplexVector>
gram_schmidt(std::span<const ComplexVector> vectors, double rank_tol = 1e-8);

/// Same, for matrices under the Hilbert-Schmidt inner product.
OrthonormalSet<ComplexMatrix>
gram_schmidt(std::span<const ComplexMatrix> matrices, double rank_tol = 1e-8);

/// Same, under the real inner product Re Tr(A^* B). This orthonormalizes the
/// real span, which is what a space of Hermitian operators needs.
OrthonormalSet<ComplexMatrix>
gram_schmidt_real(std::span<const ComplexMatrix> matrices,
                  double rank_tol = 1e-8);

/// Haar-uniform unit vector: normalized standard complex Gaussian.
ComplexVector random_unit_vector(std::size_t dim, Rng &rng);

/// Haar-random unitary (QR of a complex Ginibre matrix, phases fixed).
ComplexMatrix random_unitary(std::size_t dim, Rng &rng);

/// GUE-like Hermitian matrix with standard normal entries.
ComplexMatrix random_hermitian(std::size_t dim, Rng &rng);

/// Random Hermitian, trace removed, normalized to unit Frobenius norm.
ComplexMatrix random_traceless_hermitian(std::size_t dim, Rng &rng);

/// ||A^* A - I|| max-entry for the columns of `columns`.
double gram_deviation(const ComplexMatrix &columns);

/// Unit vectors spanning the orthogonal complement of unit vector `z` in
/// C^dim, as the columns of a dim x (dim-1) matrix.
ComplexMatrix orthogonal_complement(const ComplexVector &z);

} // namespace locc
