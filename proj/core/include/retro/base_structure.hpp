#pragma once

#include <concepts>
#include <cstdint>
#include <optional>

#include "retro/types.hpp"

namespace retro {

struct BaseCounters {
  std::uint64_t applied_sets = 0;
  std::uint64_t evals = 0;
};

/// What every list-framework structure provides: set-element updates,
/// F-evaluation, per-slot reads, and O(n) state extraction / loading.
/// Implementations are value types; a default-constructed (or copied empty)
/// instance is the empty structure.
template <class B>
concept BaseStructure =
    std::copy_constructible<B> &&
    requires(B b, const B cb, ListId list, SlotIndex index,
             std::optional<typename B::Entry> value, const State<typename B::Entry>& state) {
      typename B::Entry;
      typename B::Value;
      { B::kListCount } -> std::convertible_to<int>;
      b.apply_set(list, index, value);
      { cb.eval() } -> std::same_as<typename B::Value>;
      { cb.get(list, index) } -> std::same_as<std::optional<typename B::Entry>>;
      { cb.extract_state() } -> std::same_as<State<typename B::Entry>>;
      b.load_state(state);
      { cb.size() } -> std::convertible_to<std::size_t>;
      { cb.counters() } -> std::same_as<const BaseCounters&>;
    };

}  // namespace retro
