#pragma once

#include <cstdint>
#include <map>
#include <utility>

#include "retro/base_structure.hpp"
#include "retro/error.hpp"
#include "retro/timeline.hpp"

namespace retro {

struct PartialCounters {
  std::uint64_t updates = 0;  // pr_insert + pr_delete
  std::uint64_t queries = 0;  // query_present + extract_state
};

/// Partially retroactive wrapper around a list-framework structure.
///
/// Each (list, index) slot keeps its own chronological history. Only the
/// latest entry of a history is visible in the present, so a retroactive
/// insert or delete touches the live structure at most once, and only when
/// the latest entry of that slot changes.
template <BaseStructure Base>
class PartialRetro {
 public:
  using Entry = typename Base::Entry;
  using Value = typename Base::Value;
  using Op = RetroOp<Entry>;

  PartialRetro() = default;
  explicit PartialRetro(Base empty) : live_(std::move(empty)) {}

  void insert(TimeKey t, Op op) {
    if (op.list < 1 || op.list > Base::kListCount || op.index < 0)
      throw Error(ErrorCode::InvalidOp, "slot out of range");
    const Slot slot{op.list, op.index};
    std::optional<Entry> value = op.value;
    timeline_.insert(t, std::move(op));
    ++counters_.updates;
    auto& history = histories_[slot];
    history.emplace(t, value);
    if (history.rbegin()->first == t) live_.apply_set(slot.first, slot.second, std::move(value));
  }

  void erase(TimeKey t) {
    Op op = timeline_.erase(t);
    ++counters_.updates;
    const Slot slot{op.list, op.index};
    auto hit = histories_.find(slot);
    auto& history = hit->second;
    const bool was_latest = history.rbegin()->first == t;
    history.erase(t);
    if (was_latest) {
      live_.apply_set(slot.first, slot.second,
                      history.empty() ? std::nullopt : history.rbegin()->second);
    }
    if (history.empty()) histories_.erase(hit);
  }

  Value query_present() const {
    ++counters_.queries;
    return live_.eval();
  }

  State<Entry> extract_state() const {
    ++counters_.queries;
    return live_.extract_state();
  }

  const Timeline<Entry>& timeline() const noexcept { return timeline_; }
  const Base& live() const noexcept { return live_; }
  std::size_t op_count() const noexcept { return timeline_.size(); }
  std::size_t state_size() const { return live_.size(); }
  const PartialCounters& counters() const noexcept { return counters_; }

 private:
  using Slot = std::pair<ListId, SlotIndex>;

  Timeline<Entry> timeline_;
  std::map<Slot, std::map<TimeKey, std::optional<Entry>>> histories_;
  Base live_;
  mutable PartialCounters counters_;
};

}  // namespace retro
