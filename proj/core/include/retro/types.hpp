#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace retro {

/// Logical timestamp. Nonnegative keys belong to callers; negative keys are
/// reserved for prologue operations injected by the full-retroactivity layer.
using TimeKey = std::int64_t;

/// 1-based list identifier (L_1 .. L_k).
using ListId = int;

using SlotIndex = std::int64_t;

/// The only update kind of the list framework: set L_list[index] = value,
/// where an empty value is the idle symbol.
template <class Entry>
struct RetroOp {
  ListId list = 1;
  SlotIndex index = 0;
  std::optional<Entry> value;

  friend bool operator==(const RetroOp&, const RetroOp&) = default;
};

template <class Entry>
RetroOp<Entry> set_op(ListId list, SlotIndex index, std::optional<Entry> value) {
  return RetroOp<Entry>{list, index, std::move(value)};
}

template <class Entry>
struct StateEntry {
  ListId list = 1;
  SlotIndex index = 0;
  Entry value{};

  friend bool operator==(const StateEntry&, const StateEntry&) = default;
};

/// Every non-idle slot of a base structure, sorted by (list, index).
template <class Entry>
struct State {
  std::vector<StateEntry<Entry>> entries;

  std::size_t size() const noexcept { return entries.size(); }
  bool empty() const noexcept { return entries.empty(); }

  friend bool operator==(const State&, const State&) = default;
};

}  // namespace retro
