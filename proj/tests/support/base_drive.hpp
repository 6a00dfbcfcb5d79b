#pragma once

#include <algorithm>
#include <random>
#include <vector>

#include "oracles.hpp"
#include "retro/workload.hpp"

namespace retro::oracle {

/// Aggregate checks of a structure against the plain model; true when all hold.
inline bool agrees(const MinPlusSum& s, const SlotModel<std::int64_t>& m) {
  std::vector<std::int64_t> sums;
  for (const auto& [i, a] : m.list(1))
    if (auto b = m.get(2, i)) sums.push_back(a + *b);
  std::sort(sums.begin(), sums.end());
  const std::vector<std::int64_t> kept(s.sums().begin(), s.sums().end());
  return s.eval() == min_plus(m) && kept == sums;
}

inline bool agrees(const ThreeSum& s, const SlotModel<std::int64_t>& m) {
  if (s.triple_count() != zero_triples(m)) return false;
  if (s.view_cap() != floor_sqrt(m.list(1).size())) return false;
  for (ListId l : {2, 3}) {
    const auto want = truncated_view(m, l);
    const std::vector<std::pair<SlotIndex, std::int64_t>> got(s.view(l).begin(), s.view(l).end());
    if (got != want) return false;
  }
  for (ListId l : {1, 2, 3})
    if (s.list_size(l) != m.list(l).size()) return false;
  return s.eval() == three_sum_f(m);
}

inline bool agrees(const CircuitPair& s, const SlotModel<CircuitPairEntry>& m) {
  const auto want = good_pairs(m, s.max_size());
  return s.good_pairs() == want && s.eval() == (want > 0);
}

struct BaseRunReport {
  std::size_t ops = 0;
  std::size_t mismatches = 0;
};

/// Random apply_set calls straight on a base structure, checking every
/// aggregate and every touched slot after each call.
template <BaseStructure Base>
BaseRunReport drive_base(std::size_t ops, std::uint64_t seed, WorkloadShape shape) {
  std::mt19937_64 rng(seed);
  FamilyTraits<Base> traits(rng);
  Base s = traits.empty();
  SlotModel<typename Base::Entry> model;
  BaseRunReport report;
  for (std::size_t k = 0; k < ops; ++k) {
    const auto op = random_op(traits, shape, rng);
    s.apply_set(op.list, op.index, op.value);
    model.set(op.list, op.index, op.value);
    ++report.ops;
    const bool ok = agrees(s, model) && s.get(op.list, op.index) == model.get(op.list, op.index) &&
                    s.size() == model.size();
    if (!ok) ++report.mismatches;
  }
  if (!(s.extract_state() == model.state())) ++report.mismatches;
  return report;
}

}  // namespace retro::oracle
