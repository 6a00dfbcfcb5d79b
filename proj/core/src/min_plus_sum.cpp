#include "retro/min_plus_sum.hpp"

#include "retro/error.hpp"

namespace retro {

void MinPlusSum::apply_set(ListId list, SlotIndex index, std::optional<Entry> value) {
  if (list < 1 || list > kListCount) throw Error(ErrorCode::InvalidOp, "min-plus has two lists");
  ++counters_.applied_sets;
  auto& self = lists_[list - 1];
  const auto& other = lists_[2 - list];

  auto partner = other.find(index);
  auto mine = self.find(index);
  if (mine != self.end() && partner != other.end()) sums_.erase(sums_.find(mine->second + partner->second));

  if (value) {
    self.insert_or_assign(index, *value);
    if (partner != other.end()) sums_.insert(*value + partner->second);
  } else if (mine != self.end()) {
    self.erase(mine);
  }
}

MinPlusSum::Value MinPlusSum::eval() const {
  ++counters_.evals;
  if (sums_.empty()) return std::nullopt;
  return *sums_.begin();
}

std::optional<MinPlusSum::Entry> MinPlusSum::get(ListId list, SlotIndex index) const {
  if (list < 1 || list > kListCount) return std::nullopt;
  const auto& l = lists_[list - 1];
  auto it = l.find(index);
  if (it == l.end()) return std::nullopt;
  return it->second;
}

State<MinPlusSum::Entry> MinPlusSum::extract_state() const {
  State<Entry> state;
  state.entries.reserve(size());
  for (int i = 0; i < kListCount; ++i)
    for (const auto& [index, value] : lists_[i]) state.entries.push_back({i + 1, index, value});
  return state;
}

void MinPlusSum::load_state(const State<Entry>& state) {
  if (size() != 0) throw Error(ErrorCode::NotEmpty, "load_state needs an empty structure");
  for (const auto& e : state.entries) apply_set(e.list, e.index, e.value);
}

}  // namespace retro
