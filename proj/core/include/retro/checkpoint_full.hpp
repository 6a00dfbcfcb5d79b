#pragma once

#include <algorithm>
#include <limits>
#include <vector>

#include "retro/full_retro.hpp"
#include "retro/partial_retro.hpp"

namespace retro {

/// Full retroactivity from prefix checkpoints.
///
/// Checkpoint i owns a partially retroactive structure over every operation
/// with time <= bound_i; the last bound is +inf so it always holds the whole
/// timeline. Segments between consecutive bounds hold at most 2B operations.
/// An overflowing segment splits after its first half, and the whole set is
/// rebuilt with B = ceil(sqrt(m)) whenever m leaves [m0 / 2, 2 m0].
///
/// A query at t patches the checkpoint with the largest bound <= t by
/// inserting the operations in (bound, t], evaluates, and removes them again,
/// so it costs at most 4B + 1 partially retroactive calls.
template <BaseStructure Base>
class CheckpointFull final : public FullRetro<Base> {
 public:
  using typename FullRetro<Base>::Entry;
  using typename FullRetro<Base>::Value;
  using typename FullRetro<Base>::Op;

  static constexpr TimeKey kOpenBound = std::numeric_limits<TimeKey>::max();

  struct CheckpointInfo {
    TimeKey bound;
    std::size_t ops;      // operations in the checkpoint's structure
    std::size_t segment;  // operations in (previous bound, bound]
  };

  explicit CheckpointFull(Base empty = Base{}, std::size_t fixed_block = 0)
      : empty_(std::move(empty)), fixed_block_(fixed_block), origin_(empty_) {
    rebuild();
  }

  void insert(TimeKey t, Op op) override {
    detail::check_user_time(t);
    if (op.list < 1 || op.list > Base::kListCount || op.index < 0)
      throw Error(ErrorCode::InvalidOp, "slot out of range");
    timeline_.insert(t, op);
    const std::size_t first = segment_of(t);
    for (std::size_t i = first; i < checkpoints_.size(); ++i) checkpoints_[i].d.insert(t, op);
    ++checkpoints_[first].segment;
    if (outside_window()) {
      rebuild();
    } else if (checkpoints_[first].segment > 2 * block_) {
      split(first);
    }
  }

  void erase(TimeKey t) override {
    timeline_.erase(t);
    const std::size_t first = segment_of(t);
    for (std::size_t i = first; i < checkpoints_.size(); ++i) checkpoints_[i].d.erase(t);
    --checkpoints_[first].segment;
    if (outside_window()) rebuild();
  }

  Value query(TimeKey t) override {
    ++stats_.queries;
    // Largest bound <= t; origin_ stands for the empty prefix.
    auto it = std::upper_bound(checkpoints_.begin(), checkpoints_.end(), t,
                               [](TimeKey key, const Checkpoint& c) { return key < c.bound; });
    PartialRetro<Base>* base = &origin_;
    auto from = timeline_.begin();
    if (it != checkpoints_.begin()) {
      auto& c = *std::prev(it);
      base = &c.d;
      from = timeline_.upper_bound(c.bound);
    }
    const auto to = timeline_.upper_bound(t);

    for (auto op = from; op != to; ++op) {
      base->insert(op->first, op->second);
      ++stats_.pr_updates;
    }
    Value answer = base->query_present();
    ++stats_.pr_queries;
    for (auto op = to; op != from;) {
      --op;
      base->erase(op->first);
      ++stats_.pr_updates;
    }
    return answer;
  }

  Strategy strategy() const noexcept override { return Strategy::Checkpoint; }
  const Timeline<Entry>& timeline() const noexcept override { return timeline_; }
  const QueryStats& query_stats() const noexcept override { return stats_; }

  std::vector<State<Entry>> internal_states() const override {
    std::vector<State<Entry>> states;
    states.push_back(origin_.extract_state());
    for (const auto& c : checkpoints_) states.push_back(c.d.extract_state());
    return states;
  }

  std::size_t present_size() const override { return checkpoints_.back().d.state_size(); }

  std::size_t block() const noexcept { return block_; }

  std::vector<CheckpointInfo> checkpoints() const {
    std::vector<CheckpointInfo> out;
    for (const auto& c : checkpoints_) out.push_back({c.bound, c.d.op_count(), c.segment});
    return out;
  }

  /// Partially retroactive structure of checkpoint i, for inspection.
  const PartialRetro<Base>& structure(std::size_t i) const { return checkpoints_.at(i).d; }

  /// Recomputes B and rebuilds every checkpoint from the timeline.
  void rebuild() {
    const std::size_t m = timeline_.size();
    m0_ = std::max<std::size_t>(m, 1);
    block_ = fixed_block_ ? fixed_block_ : static_cast<std::size_t>(std::max<std::uint64_t>(ceil_sqrt(m0_), 1));
    checkpoints_.clear();
    PartialRetro<Base> running(empty_);
    std::size_t rank = 0;
    std::size_t segment = 0;
    for (const auto& [t, op] : timeline_) {
      running.insert(t, op);
      ++rank;
      ++segment;
      if (rank % block_ == 0 && rank < m) {
        checkpoints_.push_back({t, running, segment});
        segment = 0;
      }
    }
    checkpoints_.push_back({kOpenBound, std::move(running), segment});
  }

 private:
  struct Checkpoint {
    TimeKey bound;
    PartialRetro<Base> d;
    std::size_t segment;
  };

  std::size_t segment_of(TimeKey t) const {
    auto it = std::lower_bound(checkpoints_.begin(), checkpoints_.end(), t,
                               [](const Checkpoint& c, TimeKey key) { return c.bound < key; });
    return static_cast<std::size_t>(it - checkpoints_.begin());
  }

  bool outside_window() const noexcept {
    const std::size_t m = timeline_.size();
    return m > 2 * m0_ || 2 * m < m0_;
  }

  // Splits segment i after its first floor(size / 2) operations.
  void split(std::size_t i) {
    const std::size_t left = checkpoints_[i].segment / 2;
    auto op = i == 0 ? timeline_.begin() : timeline_.upper_bound(checkpoints_[i - 1].bound);
    PartialRetro<Base> d = i == 0 ? PartialRetro<Base>(empty_) : checkpoints_[i - 1].d;
    for (std::size_t k = 1; k < left; ++k, ++op) d.insert(op->first, op->second);
    const TimeKey bound = op->first;
    d.insert(op->first, op->second);
    checkpoints_[i].segment -= left;
    checkpoints_.insert(checkpoints_.begin() + static_cast<std::ptrdiff_t>(i), Checkpoint{bound, std::move(d), left});
  }

  Base empty_;
  std::size_t fixed_block_;
  Timeline<Entry> timeline_;
  std::vector<Checkpoint> checkpoints_;
  PartialRetro<Base> origin_;
  std::size_t block_ = 1;
  std::size_t m0_ = 1;
  QueryStats stats_;
};

}  // namespace retro
