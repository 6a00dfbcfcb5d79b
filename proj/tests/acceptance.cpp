// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "base_drive.hpp"
#include "cli.hpp"
#include "oracles.hpp"
#include "partial_drive.hpp"
#include "retro/reductions.hpp"
#include "retro/strategies.hpp"
#include "retro/workload.hpp"

using namespace retro;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Outcome {
  bool pass;
  std::string detail;
};

constexpr Strategy kStrategies[] = {Strategy::Checkpoint, Strategy::Wbt, Strategy::Auto};

template <class Base>
std::unique_ptr<FullRetro<Base>> build(Strategy s, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  FamilyTraits<Base> traits(rng);
  StrategyConfig config;
  config.strategy = s;
  return make_full_retro<Base>(config, traits.empty());
}

// 1 ------------------------------------------------------------------------

template <class Base>
std::size_t equivalence_mismatches(std::uint64_t seed) {
  std::size_t bad = 0;
  for (Strategy s : kStrategies) {
    auto subject = build<Base>(s, seed);
    const auto r = run_equivalence(*subject, 1000, 200, seed);
    bad += r.mismatches;
    if (r.edits != 1000 || r.queries != 200) ++bad;
  }
  return bad;
}

Outcome oracle_equivalence() {
  const auto start = Clock::now();
  std::size_t bad = 0;
  for (std::uint64_t seed : {1, 2, 3}) {
    bad += equivalence_mismatches<MinPlusSum>(seed);
    bad += equivalence_mismatches<ThreeSum>(seed);
    bad += equivalence_mismatches<CircuitPair>(seed);
  }
  const double secs = seconds_since(start);
  std::ostringstream d;
  d << "27 runs of 1000 edits + 200 queries, mismatches=" << bad << ", " << secs << " s (limit 60)";
  return {bad == 0 && secs < 60.0, d.str()};
}

// 2 ------------------------------------------------------------------------

Outcome counter_invariants() {
  std::size_t bad = 0;
  std::size_t ops = 0;
  WorkloadShape wide;
  wide.slots_per_list = 30;
  wide.idle_fraction = 0.3;
  WorkloadShape pairs;
  pairs.slots_per_list = 12;
  for (std::uint64_t seed : {1, 2, 3}) {
    for (const auto& r : {oracle::drive_base<MinPlusSum>(1000, seed, wide), oracle::drive_base<MinPlusSum>(1000, seed, {}),
                          oracle::drive_base<ThreeSum>(1000, seed, wide), oracle::drive_base<ThreeSum>(1000, seed, {}),
                          oracle::drive_base<CircuitPair>(1000, seed, pairs)}) {
      bad += r.mismatches;
      ops += r.ops;
    }
  }
  std::ostringstream d;
  d << ops << " apply_set calls checked against brute-force recounts, mismatches=" << bad;
  return {bad == 0, d.str()};
}

// 3 + 6 --------------------------------------------------------------------

struct ReductionTally {
  std::size_t runs = 0;
  std::size_t wrong = 0;
  std::size_t streams = 0;
  std::size_t bad_streams = 0;
  std::size_t planted = 0;
  std::size_t sat = 0;
  double secs = 0;
};

bool strictly_alternates(const VectorStream& stream) {
  const auto& log = stream.log();
  if (log.size() != 2 * stream.size()) return false;
  for (std::size_t i = 0; i < log.size(); ++i) {
    const auto want = i % 2 == 0 ? VectorStream::EventKind::Read : VectorStream::EventKind::Emit;
    if (log[i].kind != want || log[i].index != i / 2) return false;
  }
  return true;
}

ReductionTally run_reductions() {
  const auto start = Clock::now();
  ReductionTally t;
  std::mt19937_64 rng(2024);
  const StrategyConfig config;  // auto

  for (std::size_t n : {1, 2, 4, 8, 16, 32}) {
    for (int k = 0; k < 20; ++k) {
      const auto inst = random_minplus_instance(n, 2, rng);
      VectorStream stream(inst.vectors);
      const auto got = solve_online_minplus(inst.matrix, stream, config);
      ++t.runs;
      bool ok = got.size() == n;
      for (std::size_t i = 0; ok && i < n; ++i) {
        const auto want = oracle::min_plus_product(inst.matrix, inst.vectors[i]);
        ok = got[i] == want && brute_minplus(inst.matrix, inst.vectors[i]) == want;
      }
      t.wrong += !ok;
      ++t.streams;
      t.bad_streams += !strictly_alternates(stream);
    }
  }

  for (std::size_t n : {1, 4, 16, 49, 100}) {
    for (int k = 0; k < 100; ++k) {
      const bool plant = k % 2 == 0;
      const auto inst = random_3sum_instance(n, 3, plant, rng);
      const bool want = oracle::has_zero_triple(inst.a, inst.b, inst.c);
      t.planted += want;
      ++t.runs;
      t.wrong += solve_3sum_retro(inst, config) != want || brute_3sum(inst) != want;
    }
  }

  for (std::size_t u : {2, 4, 6, 8, 10}) {
    for (int k = 0; k < 50; ++k) {
      const auto c = random_circuit(u, 32, k % 2 == 1, rng);
      const bool want = oracle::satisfiable(c);
      t.sat += want;
      ++t.runs;
      t.wrong += c.size() > 32 || solve_csat_retro(c, config) != want || brute_csat(c) != want;
    }
  }
  t.secs = seconds_since(start);
  return t;
}

// 4 ------------------------------------------------------------------------

Outcome frugality() {
  std::size_t edits = 0;
  std::size_t violations = 0;
  std::size_t mismatches = 0;
  WorkloadShape dense;
  dense.slots_per_list = 2;
  dense.idle_fraction = 0.4;
  for (std::uint64_t seed : {1, 2, 3}) {
    for (const auto& r : {oracle::drive_partial<MinPlusSum>(1000, seed), oracle::drive_partial<ThreeSum>(1000, seed),
                          oracle::drive_partial<CircuitPair>(1000, seed),
                          oracle::drive_partial<MinPlusSum>(1000, seed, dense)}) {
      edits += r.edits;
      violations += r.frugality_violations;
      mismatches += r.state_mismatches;
    }
  }
  std::ostringstream d;
  d << edits << " pr_insert/pr_delete calls, >1 apply_set violations=" << violations
    << ", replay mismatches=" << mismatches;
  return {violations == 0 && mismatches == 0, d.str()};
}

// 5 ------------------------------------------------------------------------

Outcome overhead_scaling() {
  const auto start = Clock::now();
  const auto csv = std::filesystem::temp_directory_path() / "retro_acceptance_bench.csv";
  std::filesystem::remove(csv);
  const std::vector<std::size_t> ms{1 << 10, 1 << 12, 1 << 14, 1 << 16};
  std::ostringstream sink;
  for (std::size_t m : ms) {
    const std::string range = std::to_string(m) + ":" + std::to_string(m);
    const int code = cli::run({"bench", "--instance", "minplus", "--m-range", range, "--strategy", "all", "--n", "8",
                               "--seed", "7", "--out", csv.string()},
                              sink, sink);
    if (code != 0) return {false, "bench exited with " + std::to_string(code)};
  }

  // strategy -> m -> calls per query
  std::map<std::string, std::map<std::size_t, double>> per_query;
  std::ifstream in(csv);
  std::string line;
  std::getline(in, line);
  while (std::getline(in, line)) {
    std::vector<std::string> cols;
    std::stringstream row(line);
    for (std::string c; std::getline(row, c, ',');) cols.push_back(c);
    if (cols.size() != 10) return {false, "malformed CSV row: " + line};
    const double queries = std::stod(cols[5]);
    const double calls = std::stod(cols[6]) + std::stod(cols[7]);
    per_query[cols[1]][std::stoul(cols[3])] = calls / queries;
  }
  std::filesystem::remove(csv);

  bool ok = true;
  std::ostringstream d;
  d.precision(3);
  for (const char* s : {"checkpoint", "wbt", "auto"}) {
    d << s << " calls/query:";
    for (std::size_t m : ms) d << ' ' << per_query[s][m];
    d << "; ";
  }
  d << "ratios ckpt/wbt:";
  for (std::size_t i = 1; i < ms.size(); ++i) {
    const double rc = per_query["checkpoint"][ms[i]] / per_query["checkpoint"][ms[i - 1]];
    const double rw = per_query["wbt"][ms[i]] / per_query["wbt"][ms[i - 1]];
    d << ' ' << rc << '/' << rw;
    ok = ok && rc >= 1.6 && rc <= 2.6 && rw <= 1.35;
  }
  for (std::size_t m : ms) {
    const double best = std::min(per_query["checkpoint"][m], per_query["wbt"][m]);
    ok = ok && per_query["auto"][m] <= 1.1 * best;
  }
  const double secs = seconds_since(start);
  d << "; " << secs << " s (limit 300)";
  return {ok && secs < 300.0, d.str()};
}

// 7 ------------------------------------------------------------------------

Outcome structural_invariants() {
  std::size_t unbalanced = 0;
  std::size_t broken = 0;
  {
    std::mt19937_64 rng(77);
    FamilyTraits<MinPlusSum> traits(rng);
    WbtFull<MinPlusSum> wbt;
    TimePool live;
    std::uniform_int_distribution<TimeKey> when(0, 1 << 24);
    for (int step = 0; step < 10000; ++step) {
      if (!live.empty() && rng() % 3 == 0) {
        wbt.erase(live.take(rng));
      } else {
        TimeKey t = step % 2000 < 700 ? static_cast<TimeKey>(step) * 4096 + 1 : when(rng);
        while (wbt.timeline().contains(t)) t = when(rng);
        wbt.insert(t, random_op(traits, {}, rng));
        live.add(t);
      }
      unbalanced += !wbt.balanced();
      broken += !wbt.check_invariants(step % 1000 == 0);
    }
  }

  std::size_t oversized = 0;
  {
    std::mt19937_64 rng(78);
    FamilyTraits<MinPlusSum> traits(rng);
    CheckpointFull<MinPlusSum> ckpt;
    TimePool live;
    std::uniform_int_distribution<TimeKey> when(0, 1 << 24);
    for (int step = 0; step < 10000; ++step) {
      if (!live.empty() && (step > 7000 || rng() % 3 == 0)) {
        ckpt.erase(live.take(rng));
      } else {
        TimeKey t = step % 2000 < 700 ? static_cast<TimeKey>(step) * 4096 + 1 : when(rng);
        while (ckpt.timeline().contains(t)) t = when(rng);
        ckpt.insert(t, random_op(traits, {}, rng));
        live.add(t);
      }
      for (const auto& c : ckpt.checkpoints()) oversized += c.segment > 2 * ckpt.block();
    }
  }

  std::size_t impure = 0;
  std::size_t mismatches = 0;
  auto purity = [&](auto tag, std::uint64_t seed) {
    using Base = decltype(tag);
    for (Strategy s : kStrategies) {
      auto subject = build<Base>(s, seed);
      const auto r = run_equivalence(*subject, 600, 150, seed, {}, true);
      impure += r.purity_violations;
      mismatches += r.mismatches;
    }
  };
  purity(MinPlusSum{}, 4);
  purity(ThreeSum{}, 5);
  purity(CircuitPair{}, 6);

  std::ostringstream d;
  d << "WBT 10^4-op fuzz: alpha violations=" << unbalanced << ", invariant failures=" << broken
    << "; checkpoint 10^4-op fuzz: segments > 2B=" << oversized << "; query purity violations=" << impure
    << " (mismatches=" << mismatches << ")";
  return {unbalanced == 0 && broken == 0 && oversized == 0 && impure == 0 && mismatches == 0, d.str()};
}

bool report(int id, const char* name, const Outcome& o) {
  std::cout << (o.pass ? "PASS" : "FAIL") << "  [" << id << "] " << name << ": " << o.detail << std::endl;
  return o.pass;
}

}  // namespace

int main() {
  bool all = true;
  all &= report(1, "oracle equivalence", oracle_equivalence());
  all &= report(2, "counter invariants", counter_invariants());

  const ReductionTally t = run_reductions();
  {
    std::ostringstream d;
    d << t.runs << " instances, wrong=" << t.wrong << " (3-SUM yes=" << t.planted << "/500, CSAT sat=" << t.sat
      << "/250), " << t.secs << " s (limit 120)";
    all &= report(3, "reduction correctness", {t.wrong == 0 && t.secs < 120.0, d.str()});
  }

  all &= report(4, "update frugality", frugality());
  all &= report(5, "overhead scaling", overhead_scaling());
  {
    std::ostringstream d;
    d << t.streams << " min-plus streams, non-alternating=" << t.bad_streams;
    all &= report(6, "online discipline", {t.bad_streams == 0 && t.streams > 0, d.str()});
  }
  all &= report(7, "structural invariants", structural_invariants());

  std::cout << (all ? "ALL CRITERIA PASS" : "SOME CRITERIA FAILED") << std::endl;
  return all ? 0 : 1;
}
