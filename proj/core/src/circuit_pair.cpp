#include "retro/circuit_pair.hpp"

#include "retro/error.hpp"

namespace retro {

void CircuitPair::apply_set(ListId list, SlotIndex index, std::optional<Entry> value) {
  if (list < 1 || list > kListCount) throw Error(ErrorCode::InvalidOp, "circuit-pair has two lists");
  ++counters_.applied_sets;
  auto& self = lists_[list - 1];
  auto it = self.find(index);
  if (it != self.end()) {
    good_pairs_ -= count_partners(list, it->second);
    self.erase(it);
  }
  if (value) {
    good_pairs_ += count_partners(list, *value);
    self.emplace(index, std::move(*value));
  }
}

CircuitPair::Value CircuitPair::eval() const {
  ++counters_.evals;
  return good_pairs_ > 0;
}

std::optional<CircuitPair::Entry> CircuitPair::get(ListId list, SlotIndex index) const {
  if (list < 1 || list > kListCount) return std::nullopt;
  const auto& l = lists_[list - 1];
  auto it = l.find(index);
  if (it == l.end()) return std::nullopt;
  return it->second;
}

State<CircuitPair::Entry> CircuitPair::extract_state() const {
  State<Entry> state;
  state.entries.reserve(size());
  for (int i = 0; i < kListCount; ++i)
    for (const auto& [index, value] : lists_[i]) state.entries.push_back({i + 1, index, value});
  return state;
}

void CircuitPair::load_state(const State<Entry>& state) {
  if (size() != 0) throw Error(ErrorCode::NotEmpty, "load_state needs an empty structure");
  for (const auto& e : state.entries) apply_set(e.list, e.index, e.value);
}

std::uint64_t CircuitPair::count_partners(ListId list, const Entry& entry) const {
  std::uint64_t count = 0;
  if (list == 1) {
    for (const auto& [index, other] : lists_[1]) count += is_good_pair(entry, other, max_size_);
  } else {
    for (const auto& [index, other] : lists_[0]) count += is_good_pair(other, entry, max_size_);
  }
  return count;
}

}  // namespace retro
