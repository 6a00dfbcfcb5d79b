#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <unordered_map>

#include "retro/base_structure.hpp"

namespace retro {

/// Integer square root: the largest r with r * r <= x.
std::uint64_t isqrt(std::uint64_t x) noexcept;

/// Three integer lists; F = 1 iff |L2|^2 <= |L1|, |L3|^2 <= |L1| and some
/// L1[a] + L2[b] + L3[c] == 0.
///
/// Only the first floor(sqrt(|L1|)) populated positions of L2 and L3 (in index
/// order) take part in the triple count. Whenever the size gate passes those
/// truncated views are the whole lists, so the count is exact where it
/// matters, and a single update costs O(sqrt(|L1|)).
///
/// Aggregates:
///   values_  multiset of L1 values
///   pairs_   multiset of b + c over the truncated views
///   triples_ sum over s in pairs_ of mult(s) * mult_L1(-s)
class ThreeSum {
 public:
  using Entry = std::int64_t;
  using Value = bool;
  static constexpr int kListCount = 3;

  void apply_set(ListId list, SlotIndex index, std::optional<Entry> value);
  Value eval() const;
  std::optional<Entry> get(ListId list, SlotIndex index) const;
  State<Entry> extract_state() const;
  void load_state(const State<Entry>& state);
  std::size_t size() const noexcept;
  const BaseCounters& counters() const noexcept { return counters_; }

  std::size_t list_size(ListId list) const noexcept;
  std::uint64_t triple_count() const noexcept { return triples_; }
  std::size_t view_cap() const noexcept { return cap_; }
  /// Populated slots of the truncated view of L2 (list == 2) or L3 (list == 3).
  const std::map<SlotIndex, Entry>& view(ListId list) const { return tails_[list - 2].head; }

 private:
  // L2 / L3 split at the truncation boundary: every head index precedes every
  // tail index and head holds min(size, cap_) entries.
  struct SplitList {
    std::map<SlotIndex, Entry> head;
    std::map<SlotIndex, Entry> tail;
    std::size_t size() const noexcept { return head.size() + tail.size(); }
  };

  void set_first(SlotIndex index, std::optional<Entry> value);
  void set_split(int which, SlotIndex index, std::optional<Entry> value);
  void resize_views();
  void head_insert(int which, SlotIndex index, Entry value);
  void head_erase(int which, typename std::map<SlotIndex, Entry>::iterator it);
  void add_pairs(int which, Entry value, int sign);
  void adjust_value(Entry value, int sign);

  std::map<SlotIndex, Entry> first_;
  std::array<SplitList, 2> tails_;
  std::unordered_map<std::int64_t, std::uint64_t> values_;
  std::unordered_map<std::int64_t, std::uint64_t> pairs_;
  std::uint64_t triples_ = 0;
  std::size_t cap_ = 0;
  mutable BaseCounters counters_;
};

static_assert(BaseStructure<ThreeSum>);

}  // namespace retro
