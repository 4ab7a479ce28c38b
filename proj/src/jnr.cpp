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

#include "locc/jnr.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>

#include <omp.h>

namespace locc {

namespace {

constexpr Complex kI(0.0, 1.0);

std::size_t check_ops(std::span<const ComplexMatrix> ops, std::size_t dim) {
    for (const auto &a : ops) {
        if (a.rows() != a.cols() || static_cast<std::size_t>(a.rows()) != dim)
            throw ShapeMismatch("operator shape does not match subspace dimension " +
                                std::to_string(dim));
    }
    return ops.size();
}

RealVector forms(std::span<const ComplexMatrix> ops, const ComplexVector &z) {
    RealVector f(static_cast<Eigen::Index>(ops.size()));
    for (std::size_t i = 0; i < ops.size(); ++i)
        f[static_cast<Eigen::Index>(i)] = z.dot(ops[i] * z).real();
    return f;
}

double ops_scale(std::span<const ComplexMatrix> ops) {
    double s = 1.0;
    for (const auto &a : ops)
        s = std::max(s, a.norm());
    return s;
}

ComplexVector basis_vector(std::size_t dim, std::size_t k) {
    ComplexVector e = ComplexVector::Zero(static_cast<Eigen::Index>(dim));
    e[static_cast<Eigen::Index>(k)] = 1.0;
    return e;
}

struct TargetSolve {
    ComplexVector z;
    double residual;
};

// Grid search over z = (cos t, sin t e^{i phi}) followed by Levenberg-Marquardt
// on the two real equations Re/Im <z, B z> = target.
TargetSolve best_2x2_target(const ComplexMatrix &b, Complex target) {
    const Complex b00 = b(0, 0), b01 = b(0, 1), b10 = b(1, 0), b11 = b(1, 1);
    auto value = [&](double t, double phi) {
        const double c = std::cos(t), s = std::sin(t);
        const Complex e = std::polar(1.0, phi);
        return c * c * b00 + s * s * b11 + c * s * (e * b01 + std::conj(e) * b10) - target;
    };

    constexpr int kGrid = 64;
    double best_t = 0.0, best_phi = 0.0;
    double best = std::numeric_limits<double>::infinity();
    for (int i = 0; i < kGrid; ++i) {
        const double t = 0.5 * std::numbers::pi * i / (kGrid - 1);
        for (int j = 0; j < kGrid; ++j) {
            const double phi = 2.0 * std::numbers::pi * j / kGrid;
            const double r = std::abs(value(t, phi));
            if (r < best) {
                best = r;
                best_t = t;
                best_phi = phi;
            }
        }
    }

    const double scale = std::max(1.0, b.norm());
    double t = best_t, phi = best_phi;
    Complex f = value(t, phi);
    double mu = 1e-12;
    for (int it = 0; it < 200 && std::abs(f) > 1e-16 * scale; ++it) {
        const double c = std::cos(t), s = std::sin(t);
        const Complex e = std::polar(1.0, phi);
        const Complex dt =
            std::sin(2 * t) * (b11 - b00) + std::cos(2 * t) * (e * b01 + std::conj(e) * b10);
        const Complex dphi = c * s * (kI * e * b01 - kI * std::conj(e) * b10);
        Eigen::Matrix2d jac;
        jac << dt.real(), dphi.real(), dt.imag(), dphi.imag();
        const Eigen::Vector2d res(f.real(), f.imag());
        const Eigen::Matrix2d normal = jac.transpose() * jac;
        const double level = std::max(normal.trace(), 1e-300);
        bool accepted = false;
        while (mu < 1e12) {
            const Eigen::Matrix2d damped =
                normal + mu * level * Eigen::Matrix2d::Identity();
            const Eigen::Vector2d step = damped.ldlt().solve(-jac.transpose() * res);
            const Complex trial = value(t + step[0], phi + step[1]);
            if (std::abs(trial) < std::abs(f)) {
                t += step[0];
                phi += step[1];
                f = trial;
                mu = std::max(mu / 10.0, 1e-15);
                accepted = true;
                break;
            }
            mu *= 10.0;
        }
        if (!accepted)
            break;
    }
    ComplexVector z(2);
    z << std::cos(t), std::sin(t) * std::polar(1.0, phi);
    return {z, std::abs(f)};
}

double point_segment_distance(Complex a, Complex b) {
    const Complex ab = b - a;
    const double len2 = std::norm(ab);
    if (len2 == 0.0)
        return std::abs(a);
    const double s = std::clamp(-(std::conj(ab) * a).real() / len2, 0.0, 1.0);
    return std::abs(a + s * ab);
}

double cross(Complex a, Complex b) { return (std::conj(a) * b).imag(); }

// Lifts a vector in span{u, v} with coefficients (alpha, beta).
ComplexVector combine(const ComplexVector &u, const ComplexVector &v, const ComplexVector &c) {
    return c[0] * u + c[1] * v;
}

ComplexMatrix compress_pair(const ComplexMatrix &b, const ComplexVector &u,
                            const ComplexVector &v) {
    ComplexMatrix b2(2, 2);
    const ComplexVector bu = b * u, bv = b * v;
    b2 << u.dot(bu), u.dot(bv), v.dot(bu), v.dot(bv);
    return b2;
}

ZeroVectorResult solve_one(std::span<const ComplexMatrix> ops, std::size_t dim) {
    const auto dec = hermitian_eig(ops[0], 1e-9 * std::max(1.0, ops[0].norm()));
    const auto &lam = dec.values;
    const double cut = 1e-12 * std::max(1.0, ops[0].norm());
    Eigen::Index smallest = 0;
    lam.cwiseAbs().minCoeff(&smallest);
    if (std::abs(lam[smallest]) <= cut)
        return {dec.vectors.col(smallest), std::abs(lam[smallest]), ZeroMethod::EigPair};

    const double plus = lam[0];
    const double minus = lam[static_cast<Eigen::Index>(dim) - 1];
    if (plus <= 0.0 || minus >= 0.0)
        throw PreconditionViolated("find_zero_vector: spectrum does not straddle zero");
    // cos^2 * plus + sin^2 * minus = 0
    const double c = std::sqrt(-minus / (plus - minus));
    const double s = std::sqrt(plus / (plus - minus));
    ComplexVector z = c * dec.vectors.col(0) + s * dec.vectors.col(static_cast<Eigen::Index>(dim) - 1);
    z.normalize();
    return {z, form_residual(ops, z), ZeroMethod::EigPair};
}

ZeroVectorResult solve_two(std::span<const ComplexMatrix> ops, std::size_t dim) {
    const ComplexMatrix b = ops[0] + kI * ops[1];
    std::vector<Complex> diag(dim);
    for (std::size_t k = 0; k < dim; ++k)
        diag[k] = b(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(k));
    const auto sel = caratheodory_select(diag);

    ComplexVector z;
    if (sel.indices.size() == 1) {
        z = basis_vector(dim, sel.indices[0]);
    } else if (sel.indices.size() == 2) {
        const auto ei = basis_vector(dim, sel.indices[0]);
        const auto ej = basis_vector(dim, sel.indices[1]);
        const auto fit = best_2x2_target(compress_pair(b, ei, ej), 0.0);
        z = combine(ei, ej, fit.z);
    } else {
        // Pick the pair whose segment passes nearest the origin, land on the
        // point q of that segment, then walk the segment from q to the third
        // point to reach 0.
        const std::array<std::array<std::size_t, 3>, 3> splits{
            {{0, 1, 2}, {0, 2, 1}, {1, 2, 0}}};
        std::size_t choice = 0;
        double nearest = std::numeric_limits<double>::infinity();
        for (std::size_t s = 0; s < splits.size(); ++s) {
            const double d = point_segment_distance(diag[sel.indices[splits[s][0]]],
                                                    diag[sel.indices[splits[s][1]]]);
            if (d < nearest) {
                nearest = d;
                choice = s;
            }
        }
        const auto [p, q, r] = splits[choice];
        const double wp = sel.weights[p], wq = sel.weights[q];
        const Complex mid = (wp * diag[sel.indices[p]] + wq * diag[sel.indices[q]]) / (wp + wq);
        const auto ep = basis_vector(dim, sel.indices[p]);
        const auto eq = basis_vector(dim, sel.indices[q]);
        const auto er = basis_vector(dim, sel.indices[r]);
        const auto first = best_2x2_target(compress_pair(b, ep, eq), mid);
        ComplexVector u = combine(ep, eq, first.z);
        u.normalize();
        const auto second = best_2x2_target(compress_pair(b, u, er), 0.0);
        z = combine(u, er, second.z);
    }
    z.normalize();
    return {z, form_residual(ops, z), ZeroMethod::Caratheodory2};
}

} // namespace

std::string to_string(ZeroMethod method) {
    switch (method) {
    case ZeroMethod::Trivial:
        return "trivial";
    case ZeroMethod::Dim1Trace:
        return "dim1-trace";
    case ZeroMethod::EigPair:
        return "eig-pair";
    case ZeroMethod::Caratheodory2:
        return "caratheodory-2";
    case ZeroMethod::Optimize3:
        return "optimize-3";
    }
    return "unknown";
}

double form_residual(std::span<const ComplexMatrix> ops, const ComplexVector &z) {
    return forms(ops, z).norm();
}

JnrPoint evaluate_point(std::span<const ComplexMatrix> ops, const ComplexVector &z) {
    check_ops(ops, static_cast<std::size_t>(z.size()));
    if (std::abs(z.norm() - 1.0) > 1e-10)
        throw NotUnit("evaluate_point: ||z|| = " + std::to_string(z.norm()));
    return {forms(ops, z)};
}

std::vector<JnrPoint> sample_range_serial(std::span<const ComplexMatrix> ops,
                                          const ComplexMatrix &subspace,
                                          std::size_t count, std::uint64_t seed) {
    check_ops(ops, static_cast<std::size_t>(subspace.rows()));
    if (subspace.cols() == 0 || gram_deviation(subspace) > 1e-10)
        throw PreconditionViolated("sample_range: subspace basis is not orthonormal");
    const auto rank = static_cast<std::size_t>(subspace.cols());
    std::vector<JnrPoint> points(count);
    for (std::size_t i = 0; i < count; ++i) {
        Rng rng(stream_seed(seed, i));
        const ComplexVector z = subspace * random_unit_vector(rank, rng);
        points[i] = {forms(ops, z)};
    }
    return points;
}

std::vector<JnrPoint> sample_range(std::span<const ComplexMatrix> ops,
                                   const ComplexMatrix &subspace, std::size_t count,
                                   std::uint64_t seed) {
    check_ops(ops, static_cast<std::size_t>(subspace.rows()));
    if (subspace.cols() == 0 || gram_deviation(subspace) > 1e-10)
        throw PreconditionViolated("sample_range: subspace basis is not orthonormal");
    const auto rank = static_cast<std::size_t>(subspace.cols());
    std::vector<JnrPoint> points(count);
    const auto n = static_cast<std::int64_t>(count);
#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < n; ++i) {
        Rng rng(stream_seed(seed, static_cast<std::uint64_t>(i)));
        const ComplexVector z = subspace * random_unit_vector(rank, rng);
        points[static_cast<std::size_t>(i)] = {forms(ops, z)};
    }
    return points;
}

void write_csv(std::ostream &out, std::span<const JnrPoint> points, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i)
        out << (i ? "," : "") << 'x' << i + 1;
    out << '\n';
    char buf[32];
    for (const auto &p : points) {
        for (Eigen::Index i = 0; i < p.coords.size(); ++i) {
            std::snprintf(buf, sizeof buf, "%.17g", p.coords[i]);
            out << (i ? "," : "") << buf;
        }
        out << '\n';
    }
}

double hull_origin_margin(std::span<const JnrPoint> points) {
    std::vector<std::pair<double, double>> pts;
    for (const auto &p : points) {
        if (p.coords.size() < 2)
            throw ShapeMismatch("hull_origin_margin: points must have two coordinates");
        pts.emplace_back(p.coords[0], p.coords[1]);
    }
    if (pts.empty())
        return -std::numeric_limits<double>::infinity();
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

    auto turn = [](const auto &o, const auto &a, const auto &b) {
        return (a.first - o.first) * (b.second - o.second) -
               (a.second - o.second) * (b.first - o.first);
    };
    // Andrew's monotone chain, counter-clockwise.
    std::vector<std::pair<double, double>> hull(2 * pts.size());
    std::size_t k = 0;
    for (const auto &p : pts) {
        while (k >= 2 && turn(hull[k - 2], hull[k - 1], p) <= 0)
            --k;
        hull[k++] = p;
    }
    for (std::size_t i = pts.size() - 1, lower = k + 1; i-- > 0;) {
        while (k >= lower && turn(hull[k - 2], hull[k - 1], pts[i]) <= 0)
            --k;
        hull[k++] = pts[i];
    }
    hull.resize(k > 1 ? k - 1 : k);

    if (hull.size() < 3) {
        // Point or segment: negative distance to it.
        const Complex a(hull.front().first, hull.front().second);
        const Complex b(hull.back().first, hull.back().second);
        return -point_segment_distance(a, b);
    }
    double margin = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < hull.size(); ++i) {
        const auto &a = hull[i];
        const auto &b = hull[(i + 1) % hull.size()];
        const double len = std::hypot(b.first - a.first, b.second - a.second);
        margin = std::min(margin, turn(a, b, std::pair<double, double>{0.0, 0.0}) / len);
    }
    if (margin >= 0.0)
        return margin;
    // Outside: exact distance to the boundary, not to the supporting lines.
    double dist = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < hull.size(); ++i) {
        const auto &a = hull[i];
        const auto &b = hull[(i + 1) % hull.size()];
        dist = std::min(dist, point_segment_distance(Complex(a.first, a.second),
                                                     Complex(b.first, b.second)));
    }
    return -dist;
}

CaratheodorySelection caratheodory_select(std::span<const Complex> points) {
    const std::size_t n = points.size();
    if (n == 0)
        throw PreconditionViolated("caratheodory_select: no points");
    double scale = 0.0, total = 0.0;
    Complex sum = 0.0;
    for (const auto &p : points) {
        scale = std::max(scale, std::abs(p));
        total += std::abs(p);
        sum += p;
    }
    if (scale <= 1e-14)
        return {{0}, {1.0}, true};
    if (std::abs(sum) > 1e-9 * total)
        throw PreconditionViolated("caratheodory_select: points do not sum to zero");

    // A point already at the origin.
    std::size_t closest = 0;
    for (std::size_t i = 1; i < n; ++i)
        if (std::abs(points[i]) < std::abs(points[closest]))
            closest = i;
    if (std::abs(points[closest]) <= 1e-12 * scale)
        return {{closest}, {1.0}, false};

    // Work with centred points so the origin is exactly in their hull.
    const Complex mean = sum / static_cast<double>(n);
    std::vector<Complex> q(points.begin(), points.end());
    for (auto &x : q)
        x -= mean;

    // Opposite collinear pairs.
    CaratheodorySelection best_pair;
    double best_pair_err = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const double ni = std::abs(q[i]), nj = std::abs(q[j]);
            if (ni == 0.0 || nj == 0.0 || (std::conj(q[i]) * q[j]).real() >= 0.0)
                continue;
            const double wi = nj / (ni + nj);
            const double err = std::abs(wi * points[i] + (1.0 - wi) * points[j]);
            if (err < best_pair_err) {
                best_pair_err = err;
                best_pair = {{i, j}, {wi, 1.0 - wi}, false};
            }
        }
    }
    if (best_pair_err <= 1e-10 * scale)
        return best_pair;

    // Triangles: keep the one with the largest minimal barycentric weight.
    CaratheodorySelection best_tri;
    double best_quality = -std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            for (std::size_t k = j + 1; k < n; ++k) {
                const Complex u = q[j] - q[i], v = q[k] - q[i];
                const double det = cross(u, v);
                if (std::abs(det) <= 1e-14 * scale * scale)
                    continue;
                // 0 = q_i + s u + t v
                const double s = cross(-q[i], v) / det;
                const double t = cross(u, -q[i]) / det;
                const double w0 = 1.0 - s - t;
                const double quality = std::min({w0, s, t});
                if (quality >= -1e-12 && quality > best_quality) {
                    best_quality = quality;
                    best_tri = {{i, j, k}, {w0, s, t}, false};
                }
            }
        }
    }
    if (!best_tri.indices.empty()) {
        double norm = 0.0;
        for (auto &w : best_tri.weights) {
            w = std::max(w, 0.0);
            norm += w;
        }
        for (auto &w : best_tri.weights)
            w /= norm;
        return best_tri;
    }
    if (!best_pair.indices.empty())
        return best_pair;
    throw Error("caratheodory_select: origin not found in the hull of the points");
}

ComplexVector solve_2x2_target(const ComplexMatrix &b2, Complex target) {
    if (b2.rows() != 2 || b2.cols() != 2)
        throw ShapeMismatch("solve_2x2_target: matrix must be 2x2");
    const auto fit = best_2x2_target(b2, target);
    if (fit.residual > 1e-10 * std::max(1.0, b2.norm()))
        throw TargetOutsideRange("solve_2x2_target: target not reached, residual " +
                                 std::to_string(fit.residual));
    return fit.z;
}

SphereSearch minimize_forms(std::span<const ComplexMatrix> ops, const ComplexVector &start,
                            std::size_t max_iterations) {
    const std::size_t n = ops.size();
    const double floor = 1e-16 * ops_scale(ops);
    ComplexVector z = start.normalized();
    RealVector f = forms(ops, z);
    double r = f.norm();
    double mu = 1e-12;
    std::size_t it = 0;
    std::vector<ComplexVector> grads(n);
    for (; it < max_iterations && r > floor; ++it) {
        // Tangent gradients of <z, A_i z>: 2 (A_i z - <z, A_i z> z).
        for (std::size_t i = 0; i < n; ++i)
            grads[i] = 2.0 * (ops[i] * z - f[static_cast<Eigen::Index>(i)] * z);
        RealMatrix gram(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                gram(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
                    grads[i].dot(grads[j]).real();
        const double level = gram.trace() / static_cast<double>(n);
        if (!(level > 0.0))
            break;

        bool accepted = false;
        while (mu < 1e10) {
            const RealMatrix damped =
                gram + mu * level *
                           RealMatrix::Identity(static_cast<Eigen::Index>(n),
                                                static_cast<Eigen::Index>(n));
            const RealVector c = damped.ldlt().solve(f);
            ComplexVector trial = z;
            for (std::size_t i = 0; i < n; ++i)
                trial -= c[static_cast<Eigen::Index>(i)] * grads[i];
            trial.normalize();
            RealVector ft = forms(ops, trial);
            const double rt = ft.norm();
            if (rt < r) {
                z = std::move(trial);
                f = std::move(ft);
                r = rt;
                mu = std::max(mu / 10.0, 1e-15);
                accepted = true;
                break;
            }
            mu *= 10.0;
        }
        if (!accepted)
            break;
    }
    return {z, r, it, 0};
}

namespace {

SphereSearch run_start(std::span<const ComplexMatrix> ops, std::size_t dim,
                       const ZeroSearchOptions &options, std::size_t s) {
    Rng rng(stream_seed(options.seed, s));
    auto result = minimize_forms(ops, random_unit_vector(dim, rng), options.max_iterations);
    result.start = s;
    return result;
}

SphereSearch select_start(const std::vector<SphereSearch> &runs, const std::vector<char> &ran,
                          double zero_tol) {
    std::size_t pick = runs.size();
    for (std::size_t s = 0; s < runs.size(); ++s) {
        if (ran[s] && runs[s].residual <= zero_tol)
            return runs[s];
        if (ran[s] && (pick == runs.size() || runs[s].residual < runs[pick].residual))
            pick = s;
    }
    return runs[pick];
}

} // namespace

SphereSearch multistart_serial(std::span<const ComplexMatrix> ops,
                               const ZeroSearchOptions &options) {
    if (ops.empty() || options.starts == 0)
        throw PreconditionViolated("multistart: need operators and at least one start");
    const auto dim = static_cast<std::size_t>(ops[0].rows());
    std::vector<SphereSearch> runs(options.starts);
    std::vector<char> ran(options.starts, 0);
    for (std::size_t s = 0; s < options.starts; ++s) {
        runs[s] = run_start(ops, dim, options, s);
        ran[s] = 1;
        if (runs[s].residual <= options.zero_tol)
            break;
    }
    return select_start(runs, ran, options.zero_tol);
}

SphereSearch multistart_parallel(std::span<const ComplexMatrix> ops,
                                 const ZeroSearchOptions &options) {
    if (ops.empty() || options.starts == 0)
        throw PreconditionViolated("multistart: need operators and at least one start");
    const auto dim = static_cast<std::size_t>(ops[0].rows());
    std::vector<SphereSearch> runs(options.starts);
    std::vector<char> ran(options.starts, 0);
    std::atomic<std::size_t> first_hit{options.starts};
    const auto count = static_cast<std::int64_t>(options.starts);
#pragma omp parallel for schedule(dynamic, 1)
    for (std::int64_t si = 0; si < count; ++si) {
        const auto s = static_cast<std::size_t>(si);
        // Starts after a known success cannot be selected.
        if (s > first_hit.load())
            continue;
        runs[s] = run_start(ops, dim, options, s);
        ran[s] = 1;
        if (runs[s].residual <= options.zero_tol) {
            std::size_t cur = first_hit.load();
            while (s < cur && !first_hit.compare_exchange_weak(cur, s)) {
            }
        }
    }
    return select_start(runs, ran, options.zero_tol);
}

ZeroVectorResult find_zero_vector(std::span<const ComplexMatrix> ops, std::size_t dim,
                                  const ZeroSearchOptions &options) {
    if (dim == 0)
        throw PreconditionViolated("find_zero_vector: empty subspace");
    const std::size_t n = check_ops(ops, dim);
    for (std::size_t i = 0; i < n; ++i) {
        const double scale = std::max(1.0, ops[i].norm());
        if (hermitian_deviation(ops[i]) > 1e-9 * scale)
            throw PreconditionViolated("find_zero_vector: operator " + std::to_string(i + 1) +
                                       " is not Hermitian");
        if (std::abs(ops[i].trace()) > 1e-9 * scale)
            throw PreconditionViolated("find_zero_vector: operator " + std::to_string(i + 1) +
                                       " has trace " + std::to_string(std::abs(ops[i].trace())));
    }
    if (n >= 4 && !options.best_effort)
        throw PreconditionViolated("find_zero_vector: N >= 4 has no existence guarantee");
    if (n == 3 && dim <= 2)
        throw PreconditionViolated("find_zero_vector: N = 3 needs d >= 3");

    if (n == 0)
        return {basis_vector(dim, 0), 0.0, ZeroMethod::Trivial};
    if (dim == 1) {
        const ComplexVector e = basis_vector(1, 0);
        return {e, form_residual(ops, e), ZeroMethod::Dim1Trace};
    }

    ZeroVectorResult result;
    if (n == 1) {
        result = solve_one(ops, dim);
    } else if (n == 2) {
        result = solve_two(ops, dim);
    } else {
        const auto search = options.parallel ? multistart_parallel(ops, options)
                                             : multistart_serial(ops, options);
        result = {search.vector, search.residual, ZeroMethod::Optimize3};
    }

    if (result.residual > options.zero_tol && n <= 2) {
        // Constructive step landed close but not under tolerance: polish.
        const auto polished = minimize_forms(ops, result.vector, options.max_iterations);
        if (polished.residual < result.residual) {
            result.vector = polished.vector;
            result.residual = polished.residual;
        }
    }
    if (result.residual > options.zero_tol) {
        throw SearchFailed("find_zero_vector: best residual " + std::to_string(result.residual) +
                               " exceeds tolerance " + std::to_string(options.zero_tol),
                           result);
    }
    return result;
}

} // namespace locc
