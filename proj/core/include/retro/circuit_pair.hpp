#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>

#include "retro/base_structure.hpp"
#include "retro/circuit.hpp"

namespace retro {

/// Two lists of (circuit, bits) entries; F = 1 iff some L1[a], L2[b] form a
/// good pair. Maintains the number of good pairs, at O(n) circuit
/// evaluations per update.
class CircuitPair {
 public:
  using Entry = CircuitPairEntry;
  using Value = bool;
  static constexpr int kListCount = 2;
  static constexpr std::size_t kDefaultMaxSize = 64;

  explicit CircuitPair(std::size_t max_size = kDefaultMaxSize) : max_size_(max_size) {}

  void apply_set(ListId list, SlotIndex index, std::optional<Entry> value);
  Value eval() const;
  std::optional<Entry> get(ListId list, SlotIndex index) const;
  State<Entry> extract_state() const;
  void load_state(const State<Entry>& state);
  std::size_t size() const noexcept { return lists_[0].size() + lists_[1].size(); }
  const BaseCounters& counters() const noexcept { return counters_; }

  std::uint64_t good_pairs() const noexcept { return good_pairs_; }
  std::size_t max_size() const noexcept { return max_size_; }

 private:
  std::uint64_t count_partners(ListId list, const Entry& entry) const;

  std::size_t max_size_;
  std::array<std::map<SlotIndex, Entry>, 2> lists_;
  std::uint64_t good_pairs_ = 0;
  mutable BaseCounters counters_;
};

static_assert(BaseStructure<CircuitPair>);

}  // namespace retro
