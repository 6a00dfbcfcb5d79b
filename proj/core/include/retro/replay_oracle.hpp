#pragma once

#include "retro/full_retro.hpp"

namespace retro {

/// Ground truth: replays the queried prefix onto a fresh base structure.
template <BaseStructure Base>
class ReplayOracle final : public FullRetro<Base> {
 public:
  using typename FullRetro<Base>::Entry;
  using typename FullRetro<Base>::Value;
  using typename FullRetro<Base>::Op;

  explicit ReplayOracle(Base empty = Base{}) : empty_(std::move(empty)) {}

  void insert(TimeKey t, Op op) override {
    detail::check_user_time(t);
    if (op.list < 1 || op.list > Base::kListCount || op.index < 0)
      throw Error(ErrorCode::InvalidOp, "slot out of range");
    timeline_.insert(t, std::move(op));
  }

  void erase(TimeKey t) override { timeline_.erase(t); }

  Value query(TimeKey t) override {
    ++stats_.queries;
    return replay(t).eval();
  }

  /// Base structure after replaying every operation with time <= t.
  Base replay(TimeKey t) const {
    Base b = empty_;
    for (auto it = timeline_.begin(), end = timeline_.upper_bound(t); it != end; ++it)
      b.apply_set(it->second.list, it->second.index, it->second.value);
    return b;
  }

  Strategy strategy() const noexcept override { return Strategy::Oracle; }
  const Timeline<Entry>& timeline() const noexcept override { return timeline_; }
  const QueryStats& query_stats() const noexcept override { return stats_; }
  std::vector<State<Entry>> internal_states() const override { return {}; }
  std::size_t present_size() const override { return replay(std::numeric_limits<TimeKey>::max()).size(); }

 private:
  Base empty_;
  Timeline<Entry> timeline_;
  QueryStats stats_;
};

}  // namespace retro
