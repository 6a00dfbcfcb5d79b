#include <benchmark/benchmark.h>

#include <random>

#include "retro/strategies.hpp"
#include "retro/workload.hpp"

using namespace retro;

namespace {

constexpr TimeKey kStride = 1024;

template <class Base>
std::unique_ptr<FullRetro<Base>> filled(Strategy s, std::size_t m, std::mt19937_64& rng) {
  FamilyTraits<Base> traits(rng);
  WorkloadShape shape;
  shape.slots_per_list = 4;
  shape.idle_fraction = 0.0;
  StrategyConfig config;
  config.strategy = s;
  auto fr = make_full_retro<Base>(config, traits.empty());
  for (std::size_t i = 0; i < m; ++i) fr->insert(static_cast<TimeKey>(i + 1) * kStride, random_op(traits, shape, rng));
  return fr;
}

template <class Base>
void BM_Query(benchmark::State& state) {
  const auto s = static_cast<Strategy>(state.range(0));
  const auto m = static_cast<std::size_t>(state.range(1));
  std::mt19937_64 rng(1);
  auto fr = filled<Base>(s, m, rng);
  std::uniform_int_distribution<TimeKey> when(0, static_cast<TimeKey>(m + 1) * kStride);
  const auto before = fr->query_stats();
  for (auto _ : state) benchmark::DoNotOptimize(fr->query(when(rng)));
  const auto& after = fr->query_stats();
  state.counters["pr_calls/query"] = benchmark::Counter(
      static_cast<double>(after.pr_calls() - before.pr_calls()) / static_cast<double>(after.queries - before.queries));
  state.SetLabel(std::string(to_string(s)));
}

template <class Base>
void BM_InsertErase(benchmark::State& state) {
  const auto s = static_cast<Strategy>(state.range(0));
  const auto m = static_cast<std::size_t>(state.range(1));
  std::mt19937_64 rng(2);
  auto fr = filled<Base>(s, m, rng);
  FamilyTraits<Base> traits(rng);
  std::uniform_int_distribution<TimeKey> when(0, static_cast<TimeKey>(m + 1) * kStride);
  for (auto _ : state) {
    TimeKey t = when(rng);
    while (fr->timeline().contains(t)) t = when(rng);
    fr->insert(t, random_op(traits, {}, rng));
    fr->erase(t);
  }
  state.SetLabel(std::string(to_string(s)));
}

void strategy_grid(benchmark::internal::Benchmark* b) {
  for (Strategy s : {Strategy::Checkpoint, Strategy::Wbt, Strategy::Auto})
    for (int m : {1 << 8, 1 << 10, 1 << 12}) b->Args({static_cast<int>(s), m});
}

}  // namespace

BENCHMARK_TEMPLATE(BM_Query, MinPlusSum)->Apply(strategy_grid);
BENCHMARK_TEMPLATE(BM_Query, ThreeSum)->Apply(strategy_grid);
BENCHMARK_TEMPLATE(BM_InsertErase, MinPlusSum)->Apply(strategy_grid);
BENCHMARK_MAIN();
