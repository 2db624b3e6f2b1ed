// Serial vs OpenMP timings for the exhaustive kernels.
// Run with --benchmark_filter=... to narrow; thread count follows OMP_NUM_THREADS.

#include <algorithm>

#include <benchmark/benchmark.h>

#include "plurality/instances.hpp"
#include "plurality/oracle.hpp"
#include "plurality/sequential.hpp"
#include "plurality/simultaneous.hpp"

using namespace plurality;

namespace {

Execution execution_of(const benchmark::State& state) {
  return state.range(1) != 0 ? Execution::parallel : Execution::serial;
}

void BM_BruteForce(benchmark::State& state) {
  const Profile p = random_profile(static_cast<int>(state.range(0)), 3, 11);
  BruteForceOptions options;
  options.execution = execution_of(state);
  for (auto _ : state) benchmark::DoNotOptimize(brute_force_pne(p, options));
}

void BM_FindPne(benchmark::State& state) {
  // Three candidates with a cyclic electorate, so every tie set gets scanned.
  const int n = static_cast<int>(state.range(0));
  std::vector<std::vector<long long>> voters;
  for (int i = 0; i < n; ++i) {
    std::vector<long long> u{1, 4, 16};
    std::rotate(u.begin(), u.begin() + i % 3, u.end());
    voters.push_back(u);
  }
  const Profile p = make_profile(3, voters);
  for (auto _ : state) benchmark::DoNotOptimize(find_pne(p, execution_of(state)));
}

void BM_SpneHistory(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Profile p = random_profile(n, 3, 5);
  SolveOptions options;
  options.execution = execution_of(state);
  for (auto _ : state) benchmark::DoNotOptimize(spne_history(p, VotingOrder::identity(n), options));
}

void BM_SpneCounts(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Profile p = random_profile(n, 4, 5);
  SolveOptions options;
  options.execution = execution_of(state);
  for (auto _ : state) benchmark::DoNotOptimize(spne_counts(p, VotingOrder::identity(n), options));
}

}  // namespace

BENCHMARK(BM_BruteForce)->ArgsProduct({{6, 8}, {0, 1}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_FindPne)->ArgsProduct({{30, 300}, {0, 1}})->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_SpneHistory)->ArgsProduct({{8, 11}, {0, 1}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SpneCounts)->ArgsProduct({{12, 24}, {0, 1}})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
