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

#include "locc/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace locc {

std::uint64_t stream_seed(std::uint64_t seed, std::uint64_t index) {
    // splitmix64 finalizer over (seed, index)
    std::uint64_t x = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

double hermitian_deviation(const ComplexMatrix &a) {
    if (a.rows() != a.cols())
        throw ShapeMismatch("hermitian_deviation: matrix is not square");
    return (a - a.adjoint()).cwiseAbs().maxCoeff();
}

EigenDecomposition hermitian_eig(const ComplexMatrix &a, double hermitian_tol) {
    if (a.rows() != a.cols() || a.rows() == 0)
        throw ShapeMismatch("hermitian_eig: matrix must be square and nonempty");
    if (!a.allFinite())
        throw NoConvergence("hermitian_eig: non-finite entries");
    const double dev = hermitian_deviation(a);
    if (dev > hermitian_tol)
        throw NotHermitian("hermitian_eig: |A - A*| = " + std::to_string(dev));

    const ComplexMatrix sym = 0.5 * (a + a.adjoint());
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(sym);
    if (solver.info() != Eigen::Success)
        throw NoConvergence("hermitian_eig: eigensolver did not converge");

    // Eigen returns ascending order; flip, keeping the solver's order on ties.
    const Eigen::Index n = a.rows();
    std::vector<Eigen::Index> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    const auto &vals = solver.eigenvalues();
    std::stable_sort(order.begin(), order.end(), [&](Eigen::Index i, Eigen::Index j) {
        return vals[i] > vals[j];
    });

    EigenDecomposition out{RealVector(n), ComplexMatrix(n, n)};
    for (Eigen::Index j = 0; j < n; ++j) {
        out.values[j] = vals[order[static_cast<std::size_t>(j)]];
        out.vectors.col(j) = solver.eigenvectors().col(order[static_cast<std::size_t>(j)]);
    }
    return out;
}

SingularValueDecomposition svd(const ComplexMatrix &x) {
    if (x.size() == 0)
        throw ShapeMismatch("svd: empty matrix");
    if (!x.allFinite())
        throw NoConvergence("svd: non-finite entries");
    Eigen::JacobiSVD<ComplexMatrix> solver(x, Eigen::ComputeThinU | Eigen::ComputeThinV);
    SingularValueDecomposition out{solver.matrixU(), solver.singularValues(),
                                   solver.matrixV()};
    if (!out.singulars.allFinite())
        throw NoConvergence("svd: solver produced non-finite singular values");
    return out;
}

Complex hs_inner(const ComplexMatrix &a, const ComplexMatrix &b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw ShapeMismatch("hs_inner: shapes differ");
    // Tr(A^* B) = sum_ij conj(A_ij) B_ij
    return (a.conjugate().cwiseProduct(b)).sum();
}

namespace {

template <typename T, typename Inner>
OrthonormalSet<T> orthonormalize(std::span<const T> items, double rank_tol,
                                 Inner inner) {
    OrthonormalSet<T> out;
    out.residuals.assign(items.size(), 0.0);
    if (items.empty())
        return out;

    for (std::size_t i = 1; i < items.size(); ++i) {
        if (items[i].rows() != items[0].rows() || items[i].cols() != items[0].cols())
            throw ShapeMismatch("gram_schmidt: inputs must share one shape");
    }

    double scale = 0.0;
    for (const auto &item : items)
        scale = std::max(scale, std::sqrt(std::abs(inner(item, item))));
    if (scale == 0.0)
        return out;

    for (std::size_t i = 0; i < items.size(); ++i) {
        T v = items[i];
        for (int pass = 0; pass < 2; ++pass) {
            for (const auto &b : out.basis)
                v -= inner(b, v) * b;
        }
        const double norm = std::sqrt(std::abs(inner(v, v)));
        out.residuals[i] = norm / scale;
        if (norm / scale < rank_tol)
            continue;
        out.basis.push_back(v / norm);
        out.kept.push_back(i);
    }
    return out;
}

} // namespace

OrthonormalSet<ComplexVector> gram_schmidt(std::span<const ComplexVector> vectors,
                                           double rank_tol) {
    return orthonormalize(vectors, rank_tol,
                          [](const ComplexVector &a, const ComplexVector &b) {
                              return a.dot(b); // conjugates a
                          });
}

OrthonormalSet<ComplexMatrix> gram_schmidt(std::span<const ComplexMatrix> matrices,
                                           double rank_tol) {
    return orthonormalize(matrices, rank_tol,
                          [](const ComplexMatrix &a, const ComplexMatrix &b) {
                              return hs_inner(a, b);
                          });
}

OrthonormalSet<ComplexMatrix>
gram_schmidt_real(std::span<const ComplexMatrix> matrices, double rank_tol) {
    return orthonormalize(matrices, rank_tol,
                          [](const ComplexMatrix &a, const ComplexMatrix &b) {
                              return Complex(hs_inner(a, b).real(), 0.0);
                          });
}

ComplexVector random_unit_vector(std::size_t dim, Rng &rng) {
    if (dim == 0)
        throw ShapeMismatch("random_unit_vector: dim must be >= 1");
    std::normal_distribution<double> normal;
    ComplexVector z(static_cast<Eigen::Index>(dim));
    double norm = 0.0;
    while (norm == 0.0) {
        for (Eigen::Index i = 0; i < z.size(); ++i) {
            const double re = normal(rng);
            const double im = normal(rng);
            z[i] = Complex(re, im);
        }
        norm = z.norm();
    }
    return z / norm;
}

ComplexMatrix random_unitary(std::size_t dim, Rng &rng) {
    std::normal_distribution<double> normal;
    const auto n = static_cast<Eigen::Index>(dim);
    ComplexMatrix g(n, n);
    for (Eigen::Index j = 0; j < n; ++j) {
        for (Eigen::Index i = 0; i < n; ++i) {
            const double re = normal(rng);
            const double im = normal(rng);
            g(i, j) = Complex(re, im);
        }
    }
    Eigen::HouseholderQR<ComplexMatrix> qr(g);
    ComplexMatrix q = qr.householderQ();
    const ComplexMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (Eigen::Index j = 0; j < n; ++j) {
        const double mag = std::abs(r(j, j));
        if (mag > 0.0)
            q.col(j) *= r(j, j) / mag;
    }
    return q;
}

ComplexMatrix random_hermitian(std::size_t dim, Rng &rng) {
    std::normal_distribution<double> normal;
    const auto n = static_cast<Eigen::Index>(dim);
    ComplexMatrix h(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        h(i, i) = normal(rng);
        for (Eigen::Index j = i + 1; j < n; ++j) {
            const double re = normal(rng);
            const double im = normal(rng);
            h(i, j) = Complex(re, im) / std::sqrt(2.0);
            h(j, i) = std::conj(h(i, j));
        }
    }
    return h;
}

ComplexMatrix random_traceless_hermitian(std::size_t dim, Rng &rng) {
    ComplexMatrix h = random_hermitian(dim, rng);
    const auto n = static_cast<Eigen::Index>(dim);
    h -= (h.trace() / static_cast<double>(n)) * ComplexMatrix::Identity(n, n);
    const double norm = h.norm();
    if (norm > 0.0)
        h /= norm;
    return h;
}

double gram_deviation(const ComplexMatrix &columns) {
    const auto n = columns.cols();
    if (n == 0)
        return 0.0;
    return (columns.adjoint() * columns - ComplexMatrix::Identity(n, n))
        .cwiseAbs()
        .maxCoeff();
}

ComplexMatrix orthogonal_complement(const ComplexVector &z) {
    const auto n = z.size();
    if (n <= 1)
        return ComplexMatrix(n, 0);
    Eigen::HouseholderQR<ComplexMatrix> qr{ComplexMatrix(z)};
    ComplexMatrix q = qr.householderQ();
    return q.rightCols(n - 1);
}

} // namespace locc
