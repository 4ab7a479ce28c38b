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

#include "locc/simulator.hpp"

#include <algorithm>
#include <cmath>

namespace locc {

double OutcomeDistribution::success() const {
    const auto it = verdicts.find(true_label);
    return it == verdicts.end() ? 0.0 : it->second;
}

double OutcomeDistribution::inconclusive() const {
    const auto it = verdicts.find(kInconclusive);
    return it == verdicts.end() ? 0.0 : it->second;
}

double OutcomeDistribution::misidentification() const {
    double sum = 0.0;
    for (const auto &[label, p] : verdicts)
        if (label != true_label && label != kInconclusive)
            sum += p;
    return sum;
}

OutcomeDistribution outcome_distribution(const Protocol &protocol, const StateFamily &family,
                                         std::size_t true_index) {
    if (protocol.dim_a != family.dim_a || protocol.dim_b != family.dim_b)
        throw DimensionMismatch("protocol dimensions do not match the state family");
    if (true_index >= family.size())
        throw DimensionMismatch("true state index out of range");
    if (static_cast<std::size_t>(protocol.bob_basis.cols()) != protocol.dim_b)
        throw DimensionMismatch("protocol Bob basis is incomplete");

    OutcomeDistribution dist;
    dist.true_label = family.labels[true_index];
    for (const auto &label : family.labels)
        dist.verdicts[label] = 0.0;
    dist.verdicts[kInconclusive] = 0.0;

    const ComplexMatrix x = to_operator(family.states[true_index], family.dim_a, family.dim_b);
    for (std::size_t k = 0; k < protocol.dim_b; ++k) {
        // Bob projects onto e_k; Alice is left with (1 (x) <e_k|) psi = X conj(e_k).
        const ComplexVector xi = x * protocol.bob_basis.col(static_cast<Eigen::Index>(k)).conjugate();
        const double pk = xi.squaredNorm();
        dist.bob_marginal.push_back(pk);
        if (k < protocol.error_slots) {
            dist.outcomes.push_back({k, std::nullopt, kInconclusive, pk});
            continue;
        }
        double used = 0.0;
        const auto &list = protocol.branches[k];
        for (std::size_t j = 0; j < list.size(); ++j) {
            const double p = std::norm(list[j].vector.dot(xi));
            used += p;
            dist.outcomes.push_back({k, j, list[j].label, p});
        }
        dist.outcomes.push_back({k, std::nullopt, kInconclusive, std::max(0.0, pk - used)});
    }
    for (const auto &o : dist.outcomes) {
        dist.total += o.probability;
        dist.verdicts[o.verdict] += o.probability;
    }
    return dist;
}

namespace {

// Bob's cumulative marginal plus, per Bob outcome, the span of `outcomes` it
// owns and their cumulative joint probabilities.
struct SamplingTable {
    std::vector<double> bob_cdf;
    std::vector<std::size_t> first;
    std::vector<std::vector<double>> cdf;
};

SamplingTable make_table(const OutcomeDistribution &dist) {
    SamplingTable t;
    const std::size_t kb = dist.bob_marginal.size();
    t.first.assign(kb + 1, dist.outcomes.size());
    t.cdf.resize(kb);
    for (std::size_t i = dist.outcomes.size(); i-- > 0;)
        t.first[dist.outcomes[i].bob] = i;
    for (std::size_t k = kb; k-- > 0;)
        t.first[k] = std::min(t.first[k], t.first[k + 1]);
    double acc = 0.0;
    for (std::size_t k = 0; k < kb; ++k) {
        double inner = 0.0;
        for (std::size_t i = t.first[k]; i < t.first[k + 1]; ++i) {
            inner += dist.outcomes[i].probability;
            t.cdf[k].push_back(inner);
        }
        acc += inner;
        t.bob_cdf.push_back(acc);
    }
    return t;
}

// First index whose cumulative value exceeds u * total; zero-mass entries are
// never chosen.
std::size_t pick(const std::vector<double> &cdf, double u) {
    const double target = u * cdf.back();
    const auto it = std::upper_bound(cdf.begin(), cdf.end(), target);
    auto idx = static_cast<std::size_t>(it - cdf.begin());
    if (idx == cdf.size())
        idx = cdf.size() - 1;
    while (idx > 0 && cdf[idx] == cdf[idx - 1])
        --idx;
    return idx;
}

std::uint32_t draw(const SamplingTable &t, std::uint64_t seed, std::uint64_t trial) {
    Rng rng(stream_seed(seed, trial));
    std::uniform_real_distribution<double> uniform(0.0, 1.0);
    const double u_bob = uniform(rng);
    const double u_alice = uniform(rng);
    const std::size_t k = pick(t.bob_cdf, u_bob);
    const std::size_t j = pick(t.cdf[k], u_alice);
    return static_cast<std::uint32_t>(t.first[k] + j);
}

void check_samplable(const OutcomeDistribution &dist) {
    if (dist.bob_marginal.empty() || !(dist.total > 0.0))
        throw DimensionMismatch("outcome distribution is empty");
}

} // namespace

std::vector<std::uint32_t> sample_outcomes_serial(const OutcomeDistribution &dist,
                                                  std::size_t trials, std::uint64_t seed) {
    check_samplable(dist);
    const auto table = make_table(dist);
    std::vector<std::uint32_t> out(trials);
    for (std::size_t t = 0; t < trials; ++t)
        out[t] = draw(table, seed, t);
    return out;
}

std::vector<std::uint32_t> sample_outcomes(const OutcomeDistribution &dist, std::size_t trials,
                                           std::uint64_t seed) {
    check_samplable(dist);
    const auto table = make_table(dist);
    std::vector<std::uint32_t> out(trials);
    const auto n = static_cast<std::int64_t>(trials);
#pragma omp parallel for schedule(static)
    for (std::int64_t t = 0; t < n; ++t)
        out[static_cast<std::size_t>(t)] = draw(table, seed, static_cast<std::uint64_t>(t));
    return out;
}

SimulationStats tally(const OutcomeDistribution &dist, const StateFamily &family,
                      const Protocol &protocol, const std::vector<std::uint32_t> &samples,
                      std::uint64_t seed) {
    SimulationStats stats;
    stats.trials = samples.size();
    stats.seed = seed;
    stats.true_label = dist.true_label;
    for (const auto &label : family.labels)
        stats.verdicts[label] = 0;
    stats.verdicts[kInconclusive] = 0;
    for (const auto idx : samples) {
        const auto &o = dist.outcomes[idx];
        ++stats.verdicts[o.verdict];
        if (!o.branch && o.bob >= protocol.error_slots)
            ++stats.remainder_hits;
    }
    const double n = static_cast<double>(std::max<std::size_t>(stats.trials, 1));
    std::size_t misid = 0;
    for (const auto &[label, count] : stats.verdicts)
        if (label != stats.true_label && label != kInconclusive)
            misid += count;
    stats.success_rate = static_cast<double>(stats.verdicts[stats.true_label]) / n;
    stats.inconclusive_rate = static_cast<double>(stats.verdicts[kInconclusive]) / n;
    stats.misid_rate = static_cast<double>(misid) / n;
    return stats;
}

SimulationStats simulate(const Protocol &protocol, const StateFamily &family,
                         std::size_t true_index, std::size_t trials, std::uint64_t seed,
                         bool parallel) {
    if (trials == 0)
        throw PreconditionViolated("simulate: trials must be >= 1");
    const auto dist = outcome_distribution(protocol, family, true_index);
    const auto samples = parallel ? sample_outcomes(dist, trials, seed)
                                  : sample_outcomes_serial(dist, trials, seed);
    return tally(dist, family, protocol, samples, seed);
}

nlohmann::json stats_to_json(const SimulationStats &stats) {
    return {{"trials", stats.trials},
            {"true_state", stats.true_label},
            {"verdicts", stats.verdicts},
            {"success_rate", stats.success_rate},
            {"inconclusive_rate", stats.inconclusive_rate},
            {"misid_rate", stats.misid_rate},
            {"remainder_hits", stats.remainder_hits},
            {"seed", stats.seed}};
}

} // namespace locc
