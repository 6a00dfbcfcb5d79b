#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "retro/circuit.hpp"
#include "retro/full_retro.hpp"

namespace retro {

/// Fully retroactive calls issued by a reduction driver.
struct ReductionCensus {
  std::uint64_t inserts = 0;
  std::uint64_t deletes = 0;
  std::uint64_t queries = 0;

  std::uint64_t total() const noexcept { return inserts + deletes + queries; }
};

/// Drivers place their operations at multiples of this stride.
inline constexpr TimeKey kTimeStride = TimeKey{1} << 16;

using IntMatrix = std::vector<std::vector<std::int64_t>>;
using IntVector = std::vector<std::int64_t>;

// ---------------------------------------------------------------------------
// Online (min,+) product

/// Hands out v^1..v^n one at a time. v^{i+1} can only be read after the
/// product with v^i has been submitted; the stream logs every access.
class VectorStream {
 public:
  enum class EventKind { Read, Emit };
  struct Event {
    EventKind kind;
    std::size_t index;
    friend bool operator==(const Event&, const Event&) = default;
  };

  explicit VectorStream(IntMatrix vectors) : vectors_(std::move(vectors)) {}

  std::size_t size() const noexcept { return vectors_.size(); }
  bool exhausted() const noexcept { return next_ == vectors_.size(); }

  /// Next vector; StreamOrder if the previous result is still outstanding.
  const IntVector& next();
  void submit(IntVector result);

  const std::vector<Event>& log() const noexcept { return log_; }
  const IntMatrix& results() const noexcept { return results_; }

 private:
  IntMatrix vectors_;
  IntMatrix results_;
  std::vector<Event> log_;
  std::size_t next_ = 0;
};

/// Computes A <> v^i for each streamed vector using only fully retroactive
/// updates and queries on a min-plus-sum structure.
IntMatrix solve_online_minplus(const IntMatrix& matrix, VectorStream& stream, const StrategyConfig& config,
                               ReductionCensus* census = nullptr);

/// (A <> v)_j = min_k A[j][k] + v[k].
IntVector brute_minplus(const IntMatrix& matrix, const IntVector& vector);

// ---------------------------------------------------------------------------
// 3-SUM

struct ThreeSumInstance {
  IntVector a;
  IntVector b;
  IntVector c;
};

/// Decides whether some a + b + c == 0 through fully retroactive queries on a
/// 3-sum structure. B and C are cut into groups of floor(sqrt(n)).
bool solve_3sum_retro(const ThreeSumInstance& instance, const StrategyConfig& config,
                      ReductionCensus* census = nullptr);

bool brute_3sum(const ThreeSumInstance& instance);

// ---------------------------------------------------------------------------
// Circuit SAT

/// Decides satisfiability of a circuit with an even number u of inputs
/// through fully retroactive queries on a circuit-pair structure.
bool solve_csat_retro(const CircuitDesc& circuit, const StrategyConfig& config, ReductionCensus* census = nullptr);

bool brute_csat(const CircuitDesc& circuit);

// ---------------------------------------------------------------------------
// Instance generators

/// n x n matrix and n vectors with entries in [0, n^c].
struct MinPlusInstance {
  IntMatrix matrix;
  IntMatrix vectors;
};
MinPlusInstance random_minplus_instance(std::size_t n, unsigned c, std::mt19937_64& rng);

/// Three sets of n distinct integers in [-n^q, n^q]. With `planted`, C gets
/// an element closing a triple with some a in A and b in B.
ThreeSumInstance random_3sum_instance(std::size_t n, unsigned q, bool planted, std::mt19937_64& rng);

/// Random circuit over u inputs with at most max_size gates. With
/// `contradiction`, the output is ANDed with (g AND NOT g) and is unsatisfiable.
CircuitDesc random_circuit(std::size_t inputs, std::size_t max_size, bool contradiction, std::mt19937_64& rng);

}  // namespace retro
