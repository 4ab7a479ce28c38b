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

// Serial reference vs OpenMP variant for each parallel kernel.

#include <benchmark/benchmark.h>

#include "locc/basis_builder.hpp"
#include "locc/jnr.hpp"
#include "locc/kspace.hpp"
#include "locc/protocol.hpp"
#include "locc/simulator.hpp"

using namespace locc;

namespace {

std::vector<ComplexMatrix> tuple(std::size_t n, std::size_t d) {
    Rng rng(42);
    std::vector<ComplexMatrix> ops;
    for (std::size_t i = 0; i < n; ++i)
        ops.push_back(random_traceless_hermitian(d, rng));
    return ops;
}

void BM_SampleRangeSerial(benchmark::State &state) {
    const auto d = static_cast<std::size_t>(state.range(0));
    const auto ops = tuple(2, d);
    const ComplexMatrix sub = ComplexMatrix::Identity(state.range(0), state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(sample_range_serial(ops, sub, 10000, 1));
    state.SetItemsProcessed(state.iterations() * 10000);
}

void BM_SampleRangeParallel(benchmark::State &state) {
    const auto d = static_cast<std::size_t>(state.range(0));
    const auto ops = tuple(2, d);
    const ComplexMatrix sub = ComplexMatrix::Identity(state.range(0), state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(sample_range(ops, sub, 10000, 1));
    state.SetItemsProcessed(state.iterations() * 10000);
}

void BM_MultistartSerial(benchmark::State &state) {
    const auto ops = tuple(3, static_cast<std::size_t>(state.range(0)));
    ZeroSearchOptions opts;
    for (auto _ : state)
        benchmark::DoNotOptimize(multistart_serial(ops, opts));
}

void BM_MultistartParallel(benchmark::State &state) {
    const auto ops = tuple(3, static_cast<std::size_t>(state.range(0)));
    ZeroSearchOptions opts;
    for (auto _ : state)
        benchmark::DoNotOptimize(multistart_parallel(ops, opts));
}

OutcomeDistribution pair_distribution() {
    // two random orthonormal states in C^3 (x) C^6
    Rng rng(7);
    const ComplexMatrix u = random_unitary(18, rng);
    const auto f = make_family(3, 6, {u.col(0), u.col(1)});
    const auto rep = operator_rep(f);
    const auto k = build_kspace(rep);
    const auto basis = build_distinguishing_basis(k.operators, 6, error_slots_for(k.dim()));
    return outcome_distribution(compile_protocol(f, rep, k.operators, basis), f, 0);
}

void BM_SampleOutcomesSerial(benchmark::State &state) {
    const auto dist = pair_distribution();
    const auto trials = static_cast<std::size_t>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(sample_outcomes_serial(dist, trials, 3));
    state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_SampleOutcomesParallel(benchmark::State &state) {
    const auto dist = pair_distribution();
    const auto trials = static_cast<std::size_t>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(sample_outcomes(dist, trials, 3));
    state.SetItemsProcessed(state.iterations() * state.range(0));
}

} // namespace

BENCHMARK(BM_SampleRangeSerial)->Arg(4)->Arg(16)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SampleRangeParallel)->Arg(4)->Arg(16)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MultistartSerial)->Arg(4)->Arg(10)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MultistartParallel)->Arg(4)->Arg(10)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SampleOutcomesSerial)->Arg(100000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SampleOutcomesParallel)->Arg(100000)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
