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

#include "oracles/grid_oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace locc::testing {

namespace {

constexpr double kPi = std::numbers::pi;

// C^2: (t, phi) -> (cos t, sin t e^{i phi})
// C^3: (t1, t2, p1, p2) -> (cos t1, sin t1 cos t2 e^{i p1}, sin t1 sin t2 e^{i p2})
ComplexVector param_vector(std::size_t d, const std::vector<double> &p) {
    ComplexVector z(static_cast<Eigen::Index>(d));
    if (d == 2) {
        z << std::cos(p[0]), std::sin(p[0]) * std::polar(1.0, p[1]);
    } else {
        z << std::cos(p[0]), std::sin(p[0]) * std::cos(p[1]) * std::polar(1.0, p[2]),
            std::sin(p[0]) * std::sin(p[1]) * std::polar(1.0, p[3]);
    }
    return z;
}

double residual_of(std::span<const ComplexMatrix> ops, const ComplexVector &z) {
    double sum = 0.0;
    for (const auto &a : ops) {
        // Explicit double sum; no Eigen expression shared with the solver.
        Complex q = 0.0;
        for (Eigen::Index i = 0; i < z.size(); ++i)
            for (Eigen::Index j = 0; j < z.size(); ++j)
                q += std::conj(z[i]) * a(i, j) * z[j];
        sum += q.real() * q.real();
    }
    return std::sqrt(sum);
}

struct Candidate {
    double residual;
    std::vector<double> params;
};

void keep_best(std::vector<Candidate> &best, double r, const std::vector<double> &p,
               std::size_t cap) {
    if (best.size() == cap && r >= best.back().residual)
        return;
    best.push_back({r, p});
    std::sort(best.begin(), best.end(),
              [](const Candidate &a, const Candidate &b) { return a.residual < b.residual; });
    if (best.size() > cap)
        best.pop_back();
}

Candidate compass_search(std::span<const ComplexMatrix> ops, std::size_t d, Candidate c,
                         std::vector<double> step) {
    for (int iter = 0; iter < 20000; ++iter) {
        bool moved = false;
        for (std::size_t i = 0; i < c.params.size(); ++i) {
            for (double sign : {1.0, -1.0}) {
                auto p = c.params;
                p[i] += sign * step[i];
                const double r = residual_of(ops, param_vector(d, p));
                if (r < c.residual) {
                    c = {r, p};
                    moved = true;
                }
            }
        }
        if (!moved) {
            double largest = 0.0;
            for (auto &h : step) {
                h *= 0.5;
                largest = std::max(largest, h);
            }
            if (largest < 1e-13)
                break;
        }
    }
    return c;
}

} // namespace

GridOracleResult grid_oracle(std::span<const ComplexMatrix> ops, std::size_t min_points) {
    if (ops.empty())
        throw std::invalid_argument("grid_oracle: no operators");
    const auto d = static_cast<std::size_t>(ops[0].rows());
    if (d != 2 && d != 3)
        throw std::invalid_argument("grid_oracle: only d = 2 or 3");

    constexpr std::size_t kKeep = 8;
    std::vector<Candidate> best;
    GridOracleResult out;

    if (d == 2) {
        const auto n = static_cast<std::size_t>(std::ceil(std::sqrt(double(min_points))));
        out.grid_points = n * n;
        std::vector<double> p(2);
        for (std::size_t i = 0; i < n; ++i) {
            p[0] = 0.5 * kPi * double(i) / double(n - 1);
            const double c = std::cos(p[0]), s = std::sin(p[0]);
            for (std::size_t j = 0; j < n; ++j) {
                p[1] = 2.0 * kPi * double(j) / double(n);
                const Complex e = std::polar(1.0, p[1]);
                double sum = 0.0;
                for (const auto &a : ops) {
                    const double q = c * c * a(0, 0).real() + s * s * a(1, 1).real() +
                                     2.0 * c * s * (e * a(0, 1)).real();
                    sum += q * q;
                }
                keep_best(best, std::sqrt(sum), p, kKeep);
            }
        }
        out.grid_min = best.front().residual;
        const std::vector<double> step{0.5 * kPi / double(n - 1), 2.0 * kPi / double(n)};
        Candidate top = best.front();
        for (const auto &c : best) {
            auto r = compass_search(ops, d, c, step);
            if (r.residual < top.residual)
                top = r;
        }
        out.refined_min = top.residual;
        out.best = param_vector(d, top.params);
        return out;
    }

    const auto n = static_cast<std::size_t>(std::ceil(std::pow(double(min_points), 0.25) - 1e-9));
    out.grid_points = n * n * n * n;
    std::vector<Complex> phase(n);
    for (std::size_t j = 0; j < n; ++j)
        phase[j] = std::polar(1.0, 2.0 * kPi * double(j) / double(n));
    std::vector<double> p(4);
    for (std::size_t i1 = 0; i1 < n; ++i1) {
        p[0] = 0.5 * kPi * double(i1) / double(n - 1);
        for (std::size_t i2 = 0; i2 < n; ++i2) {
            p[1] = 0.5 * kPi * double(i2) / double(n - 1);
            const double r0 = std::cos(p[0]);
            const double r1 = std::sin(p[0]) * std::cos(p[1]);
            const double r2 = std::sin(p[0]) * std::sin(p[1]);
            for (std::size_t j1 = 0; j1 < n; ++j1) {
                for (std::size_t j2 = 0; j2 < n; ++j2) {
                    const Complex e1 = phase[j1], e2 = phase[j2];
                    const Complex e12 = std::conj(e1) * e2;
                    double sum = 0.0;
                    for (const auto &a : ops) {
                        const double q = r0 * r0 * a(0, 0).real() + r1 * r1 * a(1, 1).real() +
                                         r2 * r2 * a(2, 2).real() +
                                         2.0 * (r0 * r1 * (e1 * a(0, 1)).real() +
                                                r0 * r2 * (e2 * a(0, 2)).real() +
                                                r1 * r2 * (e12 * a(1, 2)).real());
                        sum += q * q;
                    }
                    const double r = std::sqrt(sum);
                    if (best.size() < kKeep || r < best.back().residual) {
                        p[2] = 2.0 * kPi * double(j1) / double(n);
                        p[3] = 2.0 * kPi * double(j2) / double(n);
                        keep_best(best, r, p, kKeep);
                    }
                }
            }
        }
    }
    out.grid_min = best.front().residual;
    const double ht = 0.5 * kPi / double(n - 1), hp = 2.0 * kPi / double(n);
    const std::vector<double> step{ht, ht, hp, hp};
    Candidate top = best.front();
    for (const auto &c : best) {
        auto r = compass_search(ops, d, c, step);
        if (r.residual < top.residual)
            top = r;
    }
    out.refined_min = top.residual;
    out.best = param_vector(d, top.params);
    return out;
}

} // namespace locc::testing
