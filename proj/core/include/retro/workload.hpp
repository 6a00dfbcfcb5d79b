#pragma once

#include <chrono>
#include <cstdint>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "retro/circuit_pair.hpp"
#include "retro/min_plus_sum.hpp"
#include "retro/strategies.hpp"
#include "retro/three_sum.hpp"

namespace retro {

enum class Family { MinPlus, ThreeSum, Circuit };

std::string_view to_string(Family family) noexcept;
std::optional<Family> parse_family(std::string_view name) noexcept;

std::string format_value(const std::optional<std::int64_t>& value);
std::string format_value(bool value);

/// Shape of randomly generated set-element operations.
struct WorkloadShape {
  std::size_t slots_per_list = 6;  // indices are drawn from [0, slots_per_list)
  double idle_fraction = 0.15;     // probability that a set writes the idle symbol
};

/// Random entry source per structure family.
template <class Base>
struct FamilyTraits;

template <>
struct FamilyTraits<MinPlusSum> {
  static constexpr Family family = Family::MinPlus;
  explicit FamilyTraits(std::mt19937_64&) {}
  MinPlusSum empty() const { return {}; }
  std::int64_t entry(std::mt19937_64& rng) const { return std::uniform_int_distribution<std::int64_t>(0, 20)(rng); }
};

template <>
struct FamilyTraits<ThreeSum> {
  static constexpr Family family = Family::ThreeSum;
  explicit FamilyTraits(std::mt19937_64&) {}
  ThreeSum empty() const { return {}; }
  std::int64_t entry(std::mt19937_64& rng) const { return std::uniform_int_distribution<std::int64_t>(-8, 8)(rng); }
};

/// Circuit entries come from a small pool of random circuits so that equal
/// descriptions, and therefore good pairs, show up often.
template <>
struct FamilyTraits<CircuitPair> {
  static constexpr Family family = Family::Circuit;
  explicit FamilyTraits(std::mt19937_64& rng);
  CircuitPair empty() const { return CircuitPair(16); }
  CircuitPairEntry entry(std::mt19937_64& rng) const;

  std::vector<std::shared_ptr<const CircuitDesc>> pool;
};

template <class Base>
std::optional<typename Base::Entry> random_value(const FamilyTraits<Base>& traits, const WorkloadShape& shape,
                                                 std::mt19937_64& rng) {
  if (std::bernoulli_distribution(shape.idle_fraction)(rng)) return std::nullopt;
  return traits.entry(rng);
}

template <class Base>
RetroOp<typename Base::Entry> random_op(const FamilyTraits<Base>& traits, const WorkloadShape& shape,
                                       std::mt19937_64& rng) {
  std::uniform_int_distribution<ListId> list(1, Base::kListCount);
  std::uniform_int_distribution<SlotIndex> index(0, static_cast<SlotIndex>(shape.slots_per_list) - 1);
  const ListId l = list(rng);
  const SlotIndex i = index(rng);
  return {l, i, random_value(traits, shape, rng)};
}

/// Live operation times with O(1) uniform sampling.
class TimePool {
 public:
  void add(TimeKey t) { times_.push_back(t); }
  bool empty() const noexcept { return times_.empty(); }
  std::size_t size() const noexcept { return times_.size(); }
  TimeKey take(std::mt19937_64& rng) {
    std::uniform_int_distribution<std::size_t> pick(0, times_.size() - 1);
    const std::size_t i = pick(rng);
    const TimeKey t = times_[i];
    times_[i] = times_.back();
    times_.pop_back();
    return t;
  }

 private:
  std::vector<TimeKey> times_;
};

struct EquivalenceReport {
  std::size_t edits = 0;
  std::size_t queries = 0;
  std::size_t mismatches = 0;
  std::size_t purity_violations = 0;  // queries that changed some internal state
};

/// Interleaves `edits` random retroactive inserts/deletes with `queries`
/// random-time queries on `subject` and an independent ReplayOracle, counting
/// disagreements. With `check_purity`, every internal state is compared
/// before and after each query.
template <BaseStructure Base>
EquivalenceReport run_equivalence(FullRetro<Base>& subject, std::size_t edits, std::size_t queries,
                                  std::uint64_t seed, const WorkloadShape& shape = {}, bool check_purity = false) {
  std::mt19937_64 rng(seed);
  FamilyTraits<Base> traits(rng);
  ReplayOracle<Base> oracle(traits.empty());
  TimePool live;
  const TimeKey horizon = static_cast<TimeKey>(4 * (edits + 1));
  std::uniform_int_distribution<TimeKey> when(0, horizon);

  EquivalenceReport report;
  std::size_t edits_left = edits;
  std::size_t queries_left = queries;
  while (edits_left + queries_left > 0) {
    std::uniform_int_distribution<std::size_t> coin(1, edits_left + queries_left);
    if (coin(rng) <= edits_left) {
      --edits_left;
      ++report.edits;
      if (!live.empty() && std::bernoulli_distribution(0.35)(rng)) {
        const TimeKey t = live.take(rng);
        subject.erase(t);
        oracle.erase(t);
      } else {
        TimeKey t = when(rng);
        while (oracle.timeline().contains(t)) t = when(rng);
        auto op = random_op(traits, shape, rng);
        subject.insert(t, op);
        oracle.insert(t, op);
        live.add(t);
      }
    } else {
      --queries_left;
      ++report.queries;
      const TimeKey t = when(rng);
      std::vector<State<typename Base::Entry>> before;
      if (check_purity) before = subject.internal_states();
      if (!(subject.query(t) == oracle.query(t))) ++report.mismatches;
      if (check_purity && subject.internal_states() != before) ++report.purity_violations;
    }
  }
  return report;
}

/// One (family, strategy, m) measurement of the benchmark mix: m sequential
/// inserts, then m/4 random retroactive inserts/deletes interleaved with m/4
/// random-time queries. Call counters cover the queries only.
struct BenchRecord {
  std::string family;
  std::string strategy;
  std::size_t n = 0;
  std::size_t m = 0;
  std::uint64_t updates = 0;
  std::uint64_t queries = 0;
  std::uint64_t base_apply_calls = 0;
  std::uint64_t base_eval_calls = 0;
  std::uint64_t wall_ns = 0;
  std::uint64_t seed = 0;
};

inline constexpr std::string_view kBenchCsvHeader =
    "family,strategy,n,m,updates,queries,base_apply_calls,base_eval_calls,wall_ns,seed";

std::string to_csv_row(const BenchRecord& record);

/// n is the target structure size; slots are spread evenly over the lists.
template <BaseStructure Base>
BenchRecord run_bench_cell(Strategy strategy, std::size_t n, std::size_t m, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  FamilyTraits<Base> traits(rng);
  WorkloadShape shape;
  shape.slots_per_list = std::max<std::size_t>(1, n / Base::kListCount);
  shape.idle_fraction = 0.0;

  StrategyConfig config;
  config.strategy = strategy;
  auto subject = make_full_retro<Base>(config, traits.empty());

  constexpr TimeKey stride = 1024;
  const auto start = std::chrono::steady_clock::now();
  TimePool live;
  std::uint64_t updates = 0;
  for (std::size_t i = 0; i < m; ++i) {
    const TimeKey t = static_cast<TimeKey>(i + 1) * stride;
    subject->insert(t, random_op(traits, shape, rng));
    live.add(t);
    ++updates;
  }

  const QueryStats before = subject->query_stats();
  const TimeKey horizon = static_cast<TimeKey>(m + 1) * stride;
  std::uniform_int_distribution<TimeKey> when(0, horizon);
  std::size_t edits_left = m / 4;
  std::size_t queries_left = m / 4;
  while (edits_left + queries_left > 0) {
    std::uniform_int_distribution<std::size_t> coin(1, edits_left + queries_left);
    if (coin(rng) <= edits_left) {
      --edits_left;
      ++updates;
      if (!live.empty() && std::bernoulli_distribution(0.5)(rng)) {
        subject->erase(live.take(rng));
      } else {
        TimeKey t = when(rng);
        while (subject->timeline().contains(t)) t = when(rng);
        subject->insert(t, random_op(traits, shape, rng));
        live.add(t);
      }
    } else {
      --queries_left;
      subject->query(when(rng));
    }
  }
  const auto stop = std::chrono::steady_clock::now();
  const QueryStats& after = subject->query_stats();

  BenchRecord record;
  record.family = std::string(to_string(FamilyTraits<Base>::family));
  record.strategy = std::string(to_string(strategy));
  record.n = n;
  record.m = m;
  record.updates = updates;
  record.queries = after.queries - before.queries;
  record.base_apply_calls = after.pr_updates - before.pr_updates;
  record.base_eval_calls = after.pr_queries - before.pr_queries;
  record.wall_ns = static_cast<std::uint64_t>(std::chrono::duration_cast<std::chrono::nanoseconds>(stop - start).count());
  record.seed = seed;
  return record;
}

}  // namespace retro
