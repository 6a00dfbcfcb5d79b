#pragma once

#include <algorithm>
#include <memory>
#include <span>
#include <utility>
#include <vector>

#include "retro/full_retro.hpp"
#include "retro/partial_retro.hpp"

namespace retro {

/// Full retroactivity from a weight-balanced tree over the timeline.
///
/// Leaves are the operations in time order; every node u keeps a partially
/// retroactive structure D_u over the operations S_u below it. A prefix query
/// splits the prefix into O(log m) canonical nodes and threads the running
/// state through them: the state so far is injected into D_u as prologue
/// operations at negative times, D_u's present state becomes the new running
/// state, and the prologue is removed again. Each hop costs at most 2n + 1
/// partially retroactive calls.
///
/// Balance: weight(child) <= max(alpha * weight(node), ceil(weight(node) / 2))
/// for every internal node.
/// After an update the highest violating node on the search path is rebuilt
/// into a perfectly balanced subtree with fresh D_v (scapegoat style).
template <BaseStructure Base>
class WbtFull final : public FullRetro<Base> {
 public:
  using typename FullRetro<Base>::Entry;
  using typename FullRetro<Base>::Value;
  using typename FullRetro<Base>::Op;

  explicit WbtFull(Base empty = Base{}, double alpha = 2.0 / 3.0) : empty_(std::move(empty)), alpha_(alpha) {
    if (!(alpha_ > 0.5 && alpha_ < 1.0)) throw Error(ErrorCode::InvalidOp, "alpha must lie in (0.5, 1)");
  }

  void insert(TimeKey t, Op op) override {
    detail::check_user_time(t);
    if (op.list < 1 || op.list > Base::kListCount || op.index < 0)
      throw Error(ErrorCode::InvalidOp, "slot out of range");
    timeline_.insert(t, op);
    if (!root_) {
      root_ = make_leaf(t, op);
      return;
    }

    std::vector<std::unique_ptr<Node>*> path;
    std::unique_ptr<Node>* slot = &root_;
    while (!(*slot)->leaf()) {
      path.push_back(slot);
      Node& u = **slot;
      slot = t < u.right->lo ? &u.left : &u.right;
    }
    for (auto* s : path) {
      Node& u = **s;
      u.d.insert(t, op);
      ++u.weight;
      u.lo = std::min(u.lo, t);
      u.hi = std::max(u.hi, t);
      ++element_changes_;
    }

    std::unique_ptr<Node> old = std::move(*slot);
    std::unique_ptr<Node> fresh = make_leaf(t, op);
    *slot = old->lo < t ? join(std::move(old), std::move(fresh)) : join(std::move(fresh), std::move(old));
    rebalance(path);
  }

  void erase(TimeKey t) override {
    timeline_.erase(t);
    if (root_->leaf()) {
      root_.reset();
      return;
    }

    std::vector<std::unique_ptr<Node>*> path;
    std::unique_ptr<Node>* slot = &root_;
    while (!(*slot)->leaf()) {
      path.push_back(slot);
      Node& u = **slot;
      slot = t <= u.left->hi ? &u.left : &u.right;
    }
    // The leaf's parent is replaced by the leaf's sibling.
    std::unique_ptr<Node>* parent = path.back();
    path.pop_back();
    Node& p = **parent;
    std::unique_ptr<Node> sibling = slot == &p.left ? std::move(p.right) : std::move(p.left);
    *parent = std::move(sibling);

    for (auto* s : path) {
      Node& u = **s;
      u.d.erase(t);
      --u.weight;
      ++element_changes_;
    }
    for (auto it = path.rbegin(); it != path.rend(); ++it) {
      Node& u = ***it;
      u.lo = u.left->lo;
      u.hi = u.right->hi;
    }
    rebalance(path);
  }

  Value query(TimeKey t) override {
    ++stats_.queries;
    std::vector<Node*> canonical;
    collect_prefix(root_.get(), t, canonical);
    if (canonical.empty()) {
      Base fresh = empty_;
      return fresh.eval();
    }

    State<Entry> running;
    for (std::size_t i = 0;; ++i) {
      PartialRetro<Base>& d = canonical[i]->d;
      TimeKey key = 0;
      for (const auto& e : running.entries) {
        d.insert(--key, Op{e.list, e.index, e.value});
        ++stats_.pr_updates;
      }
      const bool last = i + 1 == canonical.size();
      std::optional<Value> answer;
      if (last) {
        answer = d.query_present();
      } else {
        running = d.extract_state();
      }
      ++stats_.pr_queries;
      for (TimeKey k = -1; k >= key; --k) {
        d.erase(k);
        ++stats_.pr_updates;
      }
      if (last) return *answer;
    }
  }

  Strategy strategy() const noexcept override { return Strategy::Wbt; }
  const Timeline<Entry>& timeline() const noexcept override { return timeline_; }
  const QueryStats& query_stats() const noexcept override { return stats_; }

  std::vector<State<Entry>> internal_states() const override {
    std::vector<State<Entry>> states;
    for_each_node(root_.get(), [&](const Node& u) { states.push_back(u.d.extract_state()); });
    return states;
  }

  std::size_t present_size() const override { return root_ ? root_->d.state_size() : 0; }

  double alpha() const noexcept { return alpha_; }

  /// Operations added to or removed from some S_u by updates, rebuilds included.
  std::uint64_t element_changes() const noexcept { return element_changes_; }
  std::uint64_t rebuilds() const noexcept { return rebuilds_; }

  std::size_t depth() const { return depth_of(root_.get()); }

  /// Number of canonical nodes covering prefix_ops(t).
  std::size_t canonical_count(TimeKey t) const {
    std::vector<Node*> nodes;
    collect_prefix(root_.get(), t, nodes);
    return nodes.size();
  }

  /// Checks weights, the alpha condition and time order. With `deep`, also
  /// checks that every D_u holds exactly the operations of its subtree.
  bool check_invariants(bool deep = false) const {
    if (!root_) return timeline_.empty();
    if (root_->weight != timeline_.size()) return false;
    return check_node(*root_, deep);
  }

  /// True iff every internal node satisfies the alpha condition.
  bool balanced() const {
    bool ok = true;
    for_each_node(root_.get(), [&](const Node& u) {
      if (!u.leaf() && (violates(u, *u.left) || violates(u, *u.right))) ok = false;
    });
    return ok;
  }

 private:
  struct Node {
    std::unique_ptr<Node> left;
    std::unique_ptr<Node> right;
    std::size_t weight = 1;
    TimeKey lo = 0;
    TimeKey hi = 0;
    PartialRetro<Base> d;

    bool leaf() const noexcept { return !left; }
  };

  std::unique_ptr<Node> make_leaf(TimeKey t, const Op& op) {
    auto leaf = std::make_unique<Node>(Node{nullptr, nullptr, 1, t, t, PartialRetro<Base>(empty_)});
    leaf->d.insert(t, op);
    ++element_changes_;
    return leaf;
  }

  // New internal node over two adjacent subtrees; its D starts as a copy of
  // the left child's and receives the right child's operations.
  std::unique_ptr<Node> join(std::unique_ptr<Node> left, std::unique_ptr<Node> right) {
    auto u = std::make_unique<Node>();
    u->weight = left->weight + right->weight;
    u->lo = left->lo;
    u->hi = right->hi;
    u->d = left->d;
    for (auto it = timeline_.lower_bound(right->lo), end = timeline_.upper_bound(right->hi); it != end; ++it)
      u->d.insert(it->first, it->second);
    element_changes_ += u->weight;
    u->left = std::move(left);
    u->right = std::move(right);
    return u;
  }

  std::unique_ptr<Node> build(std::span<const std::pair<TimeKey, Op>> ops) {
    if (ops.size() == 1) return make_leaf(ops[0].first, ops[0].second);
    const std::size_t mid = ops.size() / 2;
    return join(build(ops.first(mid)), build(ops.subspan(mid)));
  }

  // A perfectly balanced split (ceil(w / 2)) never counts as a violation:
  // for alpha < 2/3 small nodes could not satisfy the bound at all.
  bool violates(const Node& u, const Node& child) const noexcept {
    if (child.weight <= (u.weight + 1) / 2) return false;
    return static_cast<double>(child.weight) > alpha_ * static_cast<double>(u.weight) + 1e-9;
  }

  void rebalance(const std::vector<std::unique_ptr<Node>*>& path) {
    for (auto* s : path) {
      Node& u = **s;
      if (u.leaf() || !(violates(u, *u.left) || violates(u, *u.right))) continue;
      std::vector<std::pair<TimeKey, Op>> ops(timeline_.lower_bound(u.lo), timeline_.upper_bound(u.hi));
      *s = build(ops);
      ++rebuilds_;
      return;
    }
  }

  static void collect_prefix(Node* u, TimeKey t, std::vector<Node*>& out) {
    while (u) {
      if (u->hi <= t) {
        out.push_back(u);
        return;
      }
      if (u->lo > t || u->leaf()) return;
      if (u->left->hi <= t) {
        out.push_back(u->left.get());
        u = u->right.get();
      } else {
        u = u->left.get();
      }
    }
  }

  template <class Fn>
  static void for_each_node(const Node* u, Fn&& fn) {
    if (!u) return;
    fn(*u);
    for_each_node(u->left.get(), fn);
    for_each_node(u->right.get(), fn);
  }

  static std::size_t depth_of(const Node* u) {
    if (!u) return 0;
    return 1 + std::max(depth_of(u->left.get()), depth_of(u->right.get()));
  }

  bool check_node(const Node& u, bool deep) const {
    if (deep) {
      const auto& ops = u.d.timeline();
      if (ops.size() != u.weight) return false;
      auto it = timeline_.lower_bound(u.lo);
      for (const auto& [t, op] : ops) {
        if (it == timeline_.end() || it->first != t || !(it->second == op)) return false;
        ++it;
      }
    }
    if (u.leaf()) return u.weight == 1 && u.lo == u.hi;
    const Node& l = *u.left;
    const Node& r = *u.right;
    if (u.weight != l.weight + r.weight) return false;
    if (u.lo != l.lo || u.hi != r.hi || !(l.hi < r.lo)) return false;
    if (violates(u, l) || violates(u, r)) return false;
    return check_node(l, deep) && check_node(r, deep);
  }

  Base empty_;
  double alpha_;
  Timeline<Entry> timeline_;
  std::unique_ptr<Node> root_;
  std::uint64_t element_changes_ = 0;
  std::uint64_t rebuilds_ = 0;
  QueryStats stats_;
};

}  // namespace retro
