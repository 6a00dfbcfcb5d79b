#include "retro/three_sum.hpp"

#include <cmath>
#include <iterator>

#include "retro/error.hpp"

namespace retro {

namespace {

std::uint64_t multiplicity(const std::unordered_map<std::int64_t, std::uint64_t>& bag, std::int64_t key) {
  auto it = bag.find(key);
  return it == bag.end() ? 0 : it->second;
}

void bag_remove(std::unordered_map<std::int64_t, std::uint64_t>& bag, std::int64_t key) {
  auto it = bag.find(key);
  if (--it->second == 0) bag.erase(it);
}

}  // namespace

std::uint64_t isqrt(std::uint64_t x) noexcept {
  auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<long double>(x)));
  while (r > 0 && r * r > x) --r;
  while ((r + 1) * (r + 1) <= x) ++r;
  return r;
}

void ThreeSum::apply_set(ListId list, SlotIndex index, std::optional<Entry> value) {
  if (list < 1 || list > kListCount) throw Error(ErrorCode::InvalidOp, "3-sum has three lists");
  ++counters_.applied_sets;
  if (list == 1) {
    set_first(index, value);
  } else {
    set_split(list - 2, index, value);
  }
}

ThreeSum::Value ThreeSum::eval() const {
  ++counters_.evals;
  const std::uint64_t n1 = first_.size();
  const std::uint64_t n2 = tails_[0].size();
  const std::uint64_t n3 = tails_[1].size();
  return n2 * n2 <= n1 && n3 * n3 <= n1 && triples_ > 0;
}

std::optional<ThreeSum::Entry> ThreeSum::get(ListId list, SlotIndex index) const {
  if (list == 1) {
    auto it = first_.find(index);
    if (it != first_.end()) return it->second;
    return std::nullopt;
  }
  if (list < 2 || list > 3) return std::nullopt;
  const auto& split = tails_[list - 2];
  if (auto it = split.head.find(index); it != split.head.end()) return it->second;
  if (auto it = split.tail.find(index); it != split.tail.end()) return it->second;
  return std::nullopt;
}

State<ThreeSum::Entry> ThreeSum::extract_state() const {
  State<Entry> state;
  state.entries.reserve(size());
  for (const auto& [index, value] : first_) state.entries.push_back({1, index, value});
  for (int w = 0; w < 2; ++w) {
    for (const auto& [index, value] : tails_[w].head) state.entries.push_back({w + 2, index, value});
    for (const auto& [index, value] : tails_[w].tail) state.entries.push_back({w + 2, index, value});
  }
  return state;
}

void ThreeSum::load_state(const State<Entry>& state) {
  if (size() != 0) throw Error(ErrorCode::NotEmpty, "load_state needs an empty structure");
  for (const auto& e : state.entries) apply_set(e.list, e.index, e.value);
}

std::size_t ThreeSum::size() const noexcept {
  return first_.size() + tails_[0].size() + tails_[1].size();
}

std::size_t ThreeSum::list_size(ListId list) const noexcept {
  if (list == 1) return first_.size();
  if (list == 2 || list == 3) return tails_[list - 2].size();
  return 0;
}

void ThreeSum::set_first(SlotIndex index, std::optional<Entry> value) {
  auto it = first_.find(index);
  if (it != first_.end()) {
    adjust_value(it->second, -1);
    if (value) {
      it->second = *value;
    } else {
      first_.erase(it);
    }
  } else if (value) {
    first_.emplace(index, *value);
  }
  if (value) adjust_value(*value, +1);
  resize_views();
}

void ThreeSum::set_split(int which, SlotIndex index, std::optional<Entry> value) {
  auto& split = tails_[which];

  if (auto hit = split.head.find(index); hit != split.head.end()) {
    if (value) {
      add_pairs(which, hit->second, -1);
      hit->second = *value;
      add_pairs(which, *value, +1);
      return;
    }
    head_erase(which, hit);
    if (!split.tail.empty() && split.head.size() < cap_) {
      auto first = split.tail.begin();
      head_insert(which, first->first, first->second);
      split.tail.erase(first);
    }
    return;
  }

  if (auto tit = split.tail.find(index); tit != split.tail.end()) {
    if (value) {
      tit->second = *value;
    } else {
      split.tail.erase(tit);
    }
    return;
  }

  if (!value) return;
  if (split.head.size() < cap_) {
    head_insert(which, index, *value);
  } else if (cap_ > 0 && index < split.head.rbegin()->first) {
    head_insert(which, index, *value);
    auto last = std::prev(split.head.end());
    split.tail.emplace(last->first, last->second);
    head_erase(which, last);
  } else {
    split.tail.emplace(index, *value);
  }
}

void ThreeSum::resize_views() {
  cap_ = static_cast<std::size_t>(isqrt(first_.size()));
  for (int w = 0; w < 2; ++w) {
    auto& split = tails_[w];
    while (split.head.size() > cap_) {
      auto last = std::prev(split.head.end());
      split.tail.emplace(last->first, last->second);
      head_erase(w, last);
    }
    while (split.head.size() < cap_ && !split.tail.empty()) {
      auto first = split.tail.begin();
      head_insert(w, first->first, first->second);
      split.tail.erase(first);
    }
  }
}

void ThreeSum::head_insert(int which, SlotIndex index, Entry value) {
  add_pairs(which, value, +1);
  tails_[which].head.emplace(index, value);
}

void ThreeSum::head_erase(int which, typename std::map<SlotIndex, Entry>::iterator it) {
  add_pairs(which, it->second, -1);
  tails_[which].head.erase(it);
}

void ThreeSum::add_pairs(int which, Entry value, int sign) {
  for (const auto& [index, other] : tails_[1 - which].head) {
    const std::int64_t sum = value + other;
    const std::uint64_t hits = multiplicity(values_, -sum);
    if (sign > 0) {
      ++pairs_[sum];
      triples_ += hits;
    } else {
      bag_remove(pairs_, sum);
      triples_ -= hits;
    }
  }
}

void ThreeSum::adjust_value(Entry value, int sign) {
  const std::uint64_t hits = multiplicity(pairs_, -value);
  if (sign > 0) {
    ++values_[value];
    triples_ += hits;
  } else {
    bag_remove(values_, value);
    triples_ -= hits;
  }
}

}  // namespace retro
