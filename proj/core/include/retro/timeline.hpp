#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "retro/error.hpp"
#include "retro/types.hpp"

namespace retro {

/// Editable, time-ordered sequence of set-element operations.
template <class Entry>
class Timeline {
 public:
  using Op = RetroOp<Entry>;
  using Map = std::map<TimeKey, Op>;
  using const_iterator = typename Map::const_iterator;

  void insert(TimeKey t, Op op) {
    auto [it, inserted] = ops_.try_emplace(t, std::move(op));
    if (!inserted) throw Error(ErrorCode::DuplicateTime, "time " + std::to_string(t) + " is occupied");
  }

  Op erase(TimeKey t) {
    auto it = ops_.find(t);
    if (it == ops_.end()) throw Error(ErrorCode::NoSuchTime, "no operation at time " + std::to_string(t));
    Op op = std::move(it->second);
    ops_.erase(it);
    return op;
  }

  bool contains(TimeKey t) const { return ops_.contains(t); }

  const Op* op_at(TimeKey t) const {
    auto it = ops_.find(t);
    return it == ops_.end() ? nullptr : &it->second;
  }

  /// All entries with key <= t, increasing.
  std::vector<std::pair<TimeKey, Op>> prefix_ops(TimeKey t) const {
    return {ops_.begin(), ops_.upper_bound(t)};
  }

  /// Iterator to the first entry with key > t.
  const_iterator upper_bound(TimeKey t) const { return ops_.upper_bound(t); }
  const_iterator lower_bound(TimeKey t) const { return ops_.lower_bound(t); }

  std::size_t size() const noexcept { return ops_.size(); }
  bool empty() const noexcept { return ops_.empty(); }
  const_iterator begin() const { return ops_.begin(); }
  const_iterator end() const { return ops_.end(); }

  friend bool operator==(const Timeline&, const Timeline&) = default;

 private:
  Map ops_;
};

}  // namespace retro
