#include <benchmark/benchmark.h>

#include <random>

#include "charge/dp_deadline.hpp"
#include "charge/dp_exact.hpp"
#include "charge/generators.hpp"
#include "charge/oracle.hpp"

using namespace charge;

namespace {

Instance knapsack_instance(int items) {
  KnapsackInput k;
  std::mt19937_64 rng(42);
  k.capacity = 1 + static_cast<Amount>(rng() % 60);
  for (int i = 0; i < items; ++i)
    k.items.emplace_back(static_cast<Value>(1 + rng() % 50),
                         1 + static_cast<Amount>(rng() % 20));
  return gen_knapsack(k);
}

void BM_dp_deadline_knapsack(benchmark::State& state) {
  const Instance inst = knapsack_instance(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(dp_deadline_solve(inst).welfare);
}

void BM_dp_deadline_random(benchmark::State& state) {
  const Instance inst = gen_random({.seed = 11,
                                    .agents = static_cast<int>(state.range(0)),
                                    .periods = 6, .max_supply = 8,
                                    .max_demand = 10, .max_value = 50});
  for (auto _ : state) benchmark::DoNotOptimize(dp_deadline_solve(inst).welfare);
}

void BM_dp_exact_x3c_multi(benchmark::State& state) {
  const int q = static_cast<int>(state.range(0));
  X3CInput x{q, {}};
  for (int j = 0; j < q; ++j) x.collection.push_back({3 * j + 1, 3 * j + 2, 3 * j + 3});
  const Instance inst = gen_x3c_multi(x);
  for (auto _ : state) benchmark::DoNotOptimize(dp_exact_solve(inst).welfare);
}

void BM_dp_exact_random_mixed(benchmark::State& state) {
  const Instance inst = gen_random({.seed = 5,
                                    .agents = static_cast<int>(state.range(0)),
                                    .periods = 3, .max_supply = 3,
                                    .max_demand = 4,
                                    .speed_kind = RandomSpeedKind::Mixed,
                                    .max_triples = 2});
  for (auto _ : state) benchmark::DoNotOptimize(dp_exact_solve(inst).welfare);
}

void BM_oracle_random(benchmark::State& state) {
  const Instance inst = gen_random({.seed = 9,
                                    .agents = static_cast<int>(state.range(0)),
                                    .periods = 4, .max_supply = 3,
                                    .max_demand = 4,
                                    .speed_kind = RandomSpeedKind::Mixed});
  for (auto _ : state) benchmark::DoNotOptimize(oracle_solve(inst).welfare);
}

BENCHMARK(BM_dp_deadline_knapsack)->Arg(5)->Arg(15)->Arg(50);
BENCHMARK(BM_dp_deadline_random)->Arg(4)->Arg(8)->Arg(16);
BENCHMARK(BM_dp_exact_x3c_multi)->Arg(1)->Arg(2);
BENCHMARK(BM_dp_exact_random_mixed)->Arg(3)->Arg(5);
BENCHMARK(BM_oracle_random)->Arg(4)->Arg(8);

}  // namespace

BENCHMARK_MAIN();
