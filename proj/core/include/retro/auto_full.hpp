#pragma once

#include "retro/checkpoint_full.hpp"
#include "retro/wbt_full.hpp"

namespace retro {

/// Keeps a checkpoint structure and a weight-balanced-tree structure over the
/// same timeline and sends each query to whichever has the lower predicted
/// cost for the current n and m. Updates go to both.
template <BaseStructure Base>
class AutoFull final : public FullRetro<Base> {
 public:
  using typename FullRetro<Base>::Entry;
  using typename FullRetro<Base>::Value;
  using typename FullRetro<Base>::Op;

  explicit AutoFull(Base empty = Base{}, double alpha = 2.0 / 3.0, std::size_t fixed_block = 0)
      : checkpoint_(empty, fixed_block), wbt_(empty, alpha) {}

  void insert(TimeKey t, Op op) override {
    checkpoint_.insert(t, op);
    wbt_.insert(t, std::move(op));
  }

  void erase(TimeKey t) override {
    checkpoint_.erase(t);
    wbt_.erase(t);
  }

  Value query(TimeKey t) override {
    const Strategy route = choose();
    FullRetro<Base>& target = route == Strategy::Wbt ? static_cast<FullRetro<Base>&>(wbt_) : checkpoint_;
    const QueryStats before = target.query_stats();
    Value answer = target.query(t);
    const QueryStats& after = target.query_stats();
    ++stats_.queries;
    stats_.pr_updates += after.pr_updates - before.pr_updates;
    stats_.pr_queries += after.pr_queries - before.pr_queries;
    ++(route == Strategy::Wbt ? routed_wbt_ : routed_checkpoint_);
    return answer;
  }

  /// Strategy the next query would use. Ties go to checkpoints.
  Strategy choose() const {
    const std::uint64_t n = present_size();
    const std::uint64_t m = this->op_count();
    return predicted_cost(Strategy::Wbt, n, m) < predicted_cost(Strategy::Checkpoint, n, m) ? Strategy::Wbt
                                                                                          : Strategy::Checkpoint;
  }

  Strategy strategy() const noexcept override { return Strategy::Auto; }
  const Timeline<Entry>& timeline() const noexcept override { return checkpoint_.timeline(); }
  const QueryStats& query_stats() const noexcept override { return stats_; }

  std::vector<State<Entry>> internal_states() const override {
    auto states = checkpoint_.internal_states();
    auto more = wbt_.internal_states();
    states.insert(states.end(), more.begin(), more.end());
    return states;
  }

  std::size_t present_size() const override { return checkpoint_.present_size(); }

  const CheckpointFull<Base>& checkpoint() const noexcept { return checkpoint_; }
  const WbtFull<Base>& wbt() const noexcept { return wbt_; }
  std::uint64_t routed_to_checkpoint() const noexcept { return routed_checkpoint_; }
  std::uint64_t routed_to_wbt() const noexcept { return routed_wbt_; }

 private:
  CheckpointFull<Base> checkpoint_;
  WbtFull<Base> wbt_;
  QueryStats stats_;
  std::uint64_t routed_checkpoint_ = 0;
  std::uint64_t routed_wbt_ = 0;
};

}  // namespace retro
