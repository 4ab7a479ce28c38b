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
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "locc/protocol.hpp"
#include "locc/states.hpp"

namespace locc {

struct Outcome {
    std::size_t bob = 0;
    std::optional<std::size_t> branch; // nullopt: remainder or error slot
    std::string verdict;
    double probability = 0.0;
};

/// Exact law of (Bob outcome, Alice outcome) when the true state is
/// family.states[true_index]. Outcomes are grouped by Bob outcome in order.
struct OutcomeDistribution {
    std::vector<Outcome> outcomes;
    std::vector<double> bob_marginal; // P(k) = ||X_l g_k||^2
    std::map<std::string, double> verdicts;
    double total = 0.0;
    std::string true_label;

    double success() const;
    double inconclusive() const;
    double misidentification() const;
};

OutcomeDistribution outcome_distribution(const Protocol &protocol, const StateFamily &family,
                                         std::size_t true_index);

/// Outcome index (into dist.outcomes) of each trial. Trial t draws Bob's
/// outcome then Alice's conditional outcome from Rng(stream_seed(seed, t)),
/// both by inverse CDF; the serial and OpenMP kernels agree bit for bit.
std::vector<std::uint32_t> sample_outcomes_serial(const OutcomeDistribution &dist,
                                                  std::size_t trials, std::uint64_t seed);
std::vector<std::uint32_t> sample_outcomes(const OutcomeDistribution &dist, std::size_t trials,
                                           std::uint64_t seed);

struct SimulationStats {
    std::size_t trials = 0;
    std::uint64_t seed = 0;
    std::string true_label;
    std::map<std::string, std::size_t> verdicts; // every label plus INCONCLUSIVE
    double success_rate = 0.0;
    double inconclusive_rate = 0.0;
    double misid_rate = 0.0;
    /// Remainder outcomes on guaranteed slots; zero up to numerical leakage.
    std::size_t remainder_hits = 0;
};

SimulationStats simulate(const Protocol &protocol, const StateFamily &family,
                         std::size_t true_index, std::size_t trials, std::uint64_t seed,
                         bool parallel = true);

SimulationStats tally(const OutcomeDistribution &dist, const StateFamily &family,
                      const Protocol &protocol, const std::vector<std::uint32_t> &samples,
                      std::uint64_t seed);

nlohmann::json stats_to_json(const SimulationStats &stats);

} // namespace locc
