#include "retro/full_retro.hpp"

#include <algorithm>

#include "retro/three_sum.hpp"

namespace retro {

std::string_view to_string(Strategy strategy) noexcept {
  switch (strategy) {
    case Strategy::Checkpoint: return "checkpoint";
    case Strategy::Wbt: return "wbt";
    case Strategy::Oracle: return "oracle";
    case Strategy::Auto: return "auto";
  }
  return "unknown";
}

std::optional<Strategy> parse_strategy(std::string_view name) noexcept {
  if (name == "checkpoint") return Strategy::Checkpoint;
  if (name == "wbt") return Strategy::Wbt;
  if (name == "oracle") return Strategy::Oracle;
  if (name == "auto") return Strategy::Auto;
  return std::nullopt;
}

std::uint64_t ceil_sqrt(std::uint64_t x) noexcept {
  const std::uint64_t r = isqrt(x);
  return r * r == x ? r : r + 1;
}

std::uint64_t ceil_log2(std::uint64_t x) noexcept {
  std::uint64_t bits = 0;
  while (bits < 64 && (std::uint64_t{1} << bits) < x) ++bits;
  return bits;
}

std::uint64_t predicted_cost(Strategy strategy, std::uint64_t n, std::uint64_t m) noexcept {
  switch (strategy) {
    case Strategy::Checkpoint: return ceil_sqrt(m);
    case Strategy::Wbt: return n * ceil_log2(m + 2);
    case Strategy::Oracle: return m;
    case Strategy::Auto:
      return std::min(predicted_cost(Strategy::Checkpoint, n, m), predicted_cost(Strategy::Wbt, n, m));
  }
  return 0;
}

}  // namespace retro
