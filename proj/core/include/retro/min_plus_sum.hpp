#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <set>

#include "retro/base_structure.hpp"

namespace retro {

/// Two integer lists; F = min over common non-idle indices a of L1[a] + L2[a].
/// The sums of all fully populated indices live in an ordered multiset.
class MinPlusSum {
 public:
  using Entry = std::int64_t;
  using Value = std::optional<std::int64_t>;  // nullopt when no index is populated in both lists
  static constexpr int kListCount = 2;

  void apply_set(ListId list, SlotIndex index, std::optional<Entry> value);
  Value eval() const;
  std::optional<Entry> get(ListId list, SlotIndex index) const;
  State<Entry> extract_state() const;
  void load_state(const State<Entry>& state);
  std::size_t size() const noexcept { return lists_[0].size() + lists_[1].size(); }
  const BaseCounters& counters() const noexcept { return counters_; }

  const std::multiset<std::int64_t>& sums() const noexcept { return sums_; }

 private:
  std::array<std::map<SlotIndex, Entry>, 2> lists_;
  std::multiset<std::int64_t> sums_;
  mutable BaseCounters counters_;
};

static_assert(BaseStructure<MinPlusSum>);

}  // namespace retro
