#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "retro/base_structure.hpp"
#include "retro/error.hpp"
#include "retro/timeline.hpp"

namespace retro {

enum class Strategy { Checkpoint, Wbt, Oracle, Auto };

std::string_view to_string(Strategy strategy) noexcept;
std::optional<Strategy> parse_strategy(std::string_view name) noexcept;

/// Predicted partially-retroactive calls per query: ceil(sqrt(m)) for
/// checkpoints, n * ceil(log2(m + 2)) for the weight-balanced tree. Oracle
/// reports m (full replay); Auto reports the smaller of the first two.
std::uint64_t predicted_cost(Strategy strategy, std::uint64_t n, std::uint64_t m) noexcept;

std::uint64_t ceil_sqrt(std::uint64_t x) noexcept;
std::uint64_t ceil_log2(std::uint64_t x) noexcept;

struct StrategyConfig {
  Strategy strategy = Strategy::Auto;
  double alpha = 2.0 / 3.0;      // weight-balance parameter, in (0.5, 1)
  std::size_t fixed_block = 0;   // checkpoint block size; 0 means ceil(sqrt(m)) at each global rebuild
};

/// Calls issued to the underlying partially retroactive structures while
/// answering queries. Updates are pr_insert / pr_delete, queries are
/// query_present / extract_state.
struct QueryStats {
  std::uint64_t queries = 0;
  std::uint64_t pr_updates = 0;
  std::uint64_t pr_queries = 0;

  std::uint64_t pr_calls() const noexcept { return pr_updates + pr_queries; }
};

/// Fully retroactive structure: edit the timeline anywhere, query any prefix.
template <BaseStructure Base>
class FullRetro {
 public:
  using Entry = typename Base::Entry;
  using Value = typename Base::Value;
  using Op = RetroOp<Entry>;

  virtual ~FullRetro() = default;

  /// Caller times must be nonnegative (InvalidTime otherwise).
  virtual void insert(TimeKey t, Op op) = 0;
  virtual void erase(TimeKey t) = 0;
  /// F evaluated on the state after every operation with time <= t.
  virtual Value query(TimeKey t) = 0;

  virtual Strategy strategy() const noexcept = 0;
  virtual const Timeline<Entry>& timeline() const noexcept = 0;
  virtual const QueryStats& query_stats() const noexcept = 0;
  /// Extracted state of every internal partially retroactive structure.
  virtual std::vector<State<Entry>> internal_states() const = 0;
  /// Size of the present state.
  virtual std::size_t present_size() const = 0;

  std::size_t op_count() const noexcept { return timeline().size(); }
};

namespace detail {
inline void check_user_time(TimeKey t) {
  if (t < 0) throw Error(ErrorCode::InvalidTime, "negative times are reserved for internal prologue operations");
}
}  // namespace detail

}  // namespace retro
