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

/// Joint numerical range of a tuple of Hermitian operators: point evaluation,
/// Monte Carlo sampling of the range, and a constructive finder for unit
/// vectors z with <z, A_i z> = 0 for all i (N <= 3, traceless A_i).

#include <complex>
#include <cstddef>
#include <cstdint>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "locc/numerics.hpp"

namespace locc {

struct JnrPoint {
    RealVector coords; // (<z, A_1 z>, ..., <z, A_N z>)
};

/// Throws NotUnit unless ||z|| = 1 to 1e-10, ShapeMismatch on size mismatch.
JnrPoint evaluate_point(std::span<const ComplexMatrix> ops, const ComplexVector &z);

/// sqrt(sum_i <z, A_i z>^2) without the unit-norm check.
double form_residual(std::span<const ComplexMatrix> ops, const ComplexVector &z);

/// `count` points of the range restricted to span(subspace columns), from
/// Haar-random unit vectors. Sample i draws from Rng(stream_seed(seed, i)),
/// so the serial and OpenMP kernels return identical clouds.
std::vector<JnrPoint> sample_range_serial(std::span<const ComplexMatrix> ops,
                                          const ComplexMatrix &subspace,
                                          std::size_t count, std::uint64_t seed);
std::vector<JnrPoint> sample_range(std::span<const ComplexMatrix> ops,
                                   const ComplexMatrix &subspace, std::size_t count,
                                   std::uint64_t seed);

/// Writes `x1,...,xN` then one point per row.
void write_csv(std::ostream &out, std::span<const JnrPoint> points, std::size_t n);

/// Signed distance from the origin to the boundary of the convex hull of 2-D
/// points (positive inside). Uses the first two coordinates.
double hull_origin_margin(std::span<const JnrPoint> points);
inline bool origin_in_hull(std::span<const JnrPoint> points, double margin) {
    return hull_origin_margin(points) >= -margin;
}

enum class ZeroMethod { Trivial, Dim1Trace, EigPair, Caratheodory2, Optimize3 };
std::string to_string(ZeroMethod method);

struct ZeroVectorResult {
    ComplexVector vector;
    double residual = 0.0;
    ZeroMethod method = ZeroMethod::Trivial;
};

/// Existence of a zero vector is guaranteed for the supported regimes, so a
/// failed search is a defect signal; the best candidate rides along.
class SearchFailed : public Error {
  public:
    SearchFailed(const std::string &what, ZeroVectorResult best)
        : Error(what), best_(std::move(best)) {}
    const ZeroVectorResult &best() const { return best_; }

  private:
    ZeroVectorResult best_;
};

struct ZeroSearchOptions {
    double zero_tol = 1e-10;
    std::size_t starts = 32;
    std::size_t max_iterations = 200;
    std::uint64_t seed = 0;
    bool parallel = true;
    /// Run the multi-start optimizer for N >= 4 too. No existence guarantee.
    bool best_effort = false;
};

/// Unit z (in the operators' coordinates) with residual <= zero_tol.
///   N = 0        first basis vector
///   d = 1        the basis vector; residual is |Tr A_i|
///   N = 1        balanced pair of eigenvectors
///   N = 2        Caratheodory selection on diagonal of A_1 + iA_2, then
///                2x2 numerical-range solves
///   N = 3, d>=3  multi-start Gauss-Newton on the unit sphere
/// `dim` is the subspace dimension d (needed when N = 0).
ZeroVectorResult find_zero_vector(std::span<const ComplexMatrix> ops, std::size_t dim,
                                  const ZeroSearchOptions &options = {});

struct CaratheodorySelection {
    std::vector<std::size_t> indices;
    std::vector<double> weights;
    bool degenerate = false; // all points ~ 0
};

/// At most three of the planar points (given as complex numbers) whose convex
/// hull holds the origin, with convex weights. Points must sum to ~0.
CaratheodorySelection caratheodory_select(std::span<const Complex> points);

/// Unit z in C^2 with <z, B2 z> = target. Throws TargetOutsideRange when the
/// best found residual exceeds 1e-10 * max(1, ||B2||_F).
ComplexVector solve_2x2_target(const ComplexMatrix &b2, Complex target);

struct SphereSearch {
    ComplexVector vector;
    double residual = 0.0;
    std::size_t iterations = 0;
    std::size_t start = 0;
};

/// Damped Gauss-Newton for sum_i <z, A_i z>^2 on the unit sphere, from `start`.
SphereSearch minimize_forms(std::span<const ComplexMatrix> ops, const ComplexVector &start,
                            std::size_t max_iterations);

/// Multi-start driver. Start s uses Rng(stream_seed(seed, s)). The result is
/// the lowest-index start reaching zero_tol, else the lowest residual (index
/// tie-break); serial and OpenMP variants agree exactly.
SphereSearch multistart_serial(std::span<const ComplexMatrix> ops,
                               const ZeroSearchOptions &options);
SphereSearch multistart_parallel(std::span<const ComplexMatrix> ops,
                                 const ZeroSearchOptions &options);

} // namespace locc
