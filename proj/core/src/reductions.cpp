#include "retro/reductions.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <unordered_set>

#include "retro/circuit_pair.hpp"
#include "retro/min_plus_sum.hpp"
#include "retro/strategies.hpp"
#include "retro/three_sum.hpp"

namespace retro {

namespace {

// Fully retroactive structure plus the census of calls made on it.
template <BaseStructure Base>
class CountingRetro {
 public:
  using Op = RetroOp<typename Base::Entry>;

  CountingRetro(const StrategyConfig& config, Base empty) : impl_(make_full_retro<Base>(config, std::move(empty))) {}

  void insert(TimeKey t, Op op) {
    impl_->insert(t, std::move(op));
    ++census_.inserts;
  }
  void erase(TimeKey t) {
    impl_->erase(t);
    ++census_.deletes;
  }
  void replace(TimeKey t, Op op) {
    erase(t);
    insert(t, std::move(op));
  }
  typename Base::Value query(TimeKey t) {
    ++census_.queries;
    return impl_->query(t);
  }

  void report(ReductionCensus* out) const {
    if (out) *out = census_;
  }

 private:
  std::unique_ptr<FullRetro<Base>> impl_;
  ReductionCensus census_;
};

class Clock {
 public:
  TimeKey tick() { return now_ += kTimeStride; }

 private:
  TimeKey now_ = 0;
};

std::int64_t ipow(std::int64_t base, unsigned exp) {
  std::int64_t r = 1;
  while (exp--) {
    if (r > std::numeric_limits<std::int64_t>::max() / std::max<std::int64_t>(base, 1))
      return std::numeric_limits<std::int64_t>::max();
    r *= base;
  }
  return r;
}

std::string bits_of(std::uint64_t value, std::size_t width) {
  std::string bits(width, '0');
  for (std::size_t i = 0; i < width; ++i)
    if (value >> (width - 1 - i) & 1) bits[i] = '1';
  return bits;
}

}  // namespace

// ---------------------------------------------------------------------------

const IntVector& VectorStream::next() {
  if (next_ >= vectors_.size()) throw Error(ErrorCode::StreamOrder, "stream exhausted");
  if (results_.size() != next_) throw Error(ErrorCode::StreamOrder, "previous product not emitted yet");
  log_.push_back({EventKind::Read, next_});
  return vectors_[next_++];
}

void VectorStream::submit(IntVector result) {
  if (results_.size() + 1 != next_) throw Error(ErrorCode::StreamOrder, "no outstanding vector");
  log_.push_back({EventKind::Emit, results_.size()});
  results_.push_back(std::move(result));
}

IntMatrix solve_online_minplus(const IntMatrix& matrix, VectorStream& stream, const StrategyConfig& config,
                               ReductionCensus* census) {
  const std::size_t n = matrix.size();
  for (const auto& row : matrix)
    if (row.size() != n) throw Error(ErrorCode::DimensionMismatch, "matrix must be square");
  if (stream.size() != n) throw Error(ErrorCode::DimensionMismatch, "need exactly n vectors");

  CountingRetro<MinPlusSum> retro(config, MinPlusSum{});
  Clock clock;
  using Op = RetroOp<std::int64_t>;

  std::vector<TimeKey> vector_slots(n);
  for (std::size_t k = 0; k < n; ++k) {
    vector_slots[k] = clock.tick();
    retro.insert(vector_slots[k], Op{1, static_cast<SlotIndex>(k), 0});
  }
  std::vector<TimeKey> row_done(n);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t k = 0; k < n; ++k) {
      row_done[j] = clock.tick();
      retro.insert(row_done[j], Op{2, static_cast<SlotIndex>(k), matrix[j][k]});
    }
  }

  IntMatrix products;
  while (!stream.exhausted()) {
    const IntVector& v = stream.next();
    if (v.size() != n) throw Error(ErrorCode::DimensionMismatch, "vector length differs from n");
    for (std::size_t k = 0; k < n; ++k) retro.erase(vector_slots[k]);
    for (std::size_t k = 0; k < n; ++k) retro.insert(vector_slots[k], Op{1, static_cast<SlotIndex>(k), v[k]});
    IntVector product(n);
    for (std::size_t j = 0; j < n; ++j) {
      auto value = retro.query(row_done[j]);
      product[j] = value.value();
    }
    products.push_back(product);
    stream.submit(std::move(product));
  }
  retro.report(census);
  return products;
}

IntVector brute_minplus(const IntMatrix& matrix, const IntVector& vector) {
  IntVector out;
  out.reserve(matrix.size());
  for (const auto& row : matrix) {
    if (row.size() != vector.size()) throw Error(ErrorCode::DimensionMismatch, "row length differs from vector");
    std::int64_t best = std::numeric_limits<std::int64_t>::max();
    for (std::size_t k = 0; k < row.size(); ++k) best = std::min(best, row[k] + vector[k]);
    out.push_back(best);
  }
  return out;
}

// ---------------------------------------------------------------------------

bool solve_3sum_retro(const ThreeSumInstance& instance, const StrategyConfig& config, ReductionCensus* census) {
  const std::size_t n = instance.a.size();
  if (instance.b.size() != n || instance.c.size() != n)
    throw Error(ErrorCode::DimensionMismatch, "A, B and C must have the same size");
  if (n == 0) {
    if (census) *census = {};
    return false;
  }

  // Groups of floor(sqrt(n)) keep |L2|^2, |L3|^2 <= |L1| = n at every query.
  const std::size_t group = static_cast<std::size_t>(isqrt(n));
  const std::size_t groups = (n + group - 1) / group;
  CountingRetro<ThreeSum> retro(config, ThreeSum{});
  Clock clock;
  using Op = RetroOp<std::int64_t>;
  auto member = [&](const IntVector& set, std::size_t g, std::size_t k) -> std::optional<std::int64_t> {
    const std::size_t i = g * group + k;
    if (i < n) return set[i];
    return std::nullopt;
  };

  for (std::size_t i = 0; i < n; ++i) retro.insert(clock.tick(), Op{1, static_cast<SlotIndex>(i), instance.a[i]});
  std::vector<TimeKey> placeholders(group);
  for (std::size_t k = 0; k < group; ++k) {
    placeholders[k] = clock.tick();
    retro.insert(placeholders[k], Op{2, static_cast<SlotIndex>(k), 0});
  }
  std::vector<TimeKey> group_done(groups);
  for (std::size_t j = 0; j < groups; ++j) {
    for (std::size_t k = 0; k < group; ++k) {
      group_done[j] = clock.tick();
      retro.insert(group_done[j], Op{3, static_cast<SlotIndex>(k), member(instance.c, j, k)});
    }
  }

  bool found = false;
  for (std::size_t i = 0; i < groups; ++i) {
    for (std::size_t k = 0; k < group; ++k)
      retro.replace(placeholders[k], Op{2, static_cast<SlotIndex>(k), member(instance.b, i, k)});
    for (std::size_t j = 0; j < groups; ++j) found = retro.query(group_done[j]) || found;
  }
  retro.report(census);
  return found;
}

bool brute_3sum(const ThreeSumInstance& instance) {
  std::unordered_set<std::int64_t> a(instance.a.begin(), instance.a.end());
  for (auto b : instance.b)
    for (auto c : instance.c)
      if (a.contains(-(b + c))) return true;
  return false;
}

// ---------------------------------------------------------------------------

bool solve_csat_retro(const CircuitDesc& circuit, const StrategyConfig& config, ReductionCensus* census) {
  const std::size_t u = circuit.num_inputs();
  if (u % 2 != 0) throw Error(ErrorCode::OddInputCount, "circuit has " + std::to_string(u) + " inputs");
  if (!circuit.well_formed()) throw Error(ErrorCode::MalformedCircuit, "circuit is not well formed");
  if (u > 40) throw Error(ErrorCode::InvalidOp, "too many inputs for enumeration");

  const std::size_t half = u / 2;
  const std::uint64_t entries = std::uint64_t{1} << half;
  const std::uint64_t groups = std::uint64_t{1} << ((u + 3) / 4);
  const std::uint64_t group = (entries + groups - 1) / groups;

  auto shared = std::make_shared<const CircuitDesc>(circuit);
  CountingRetro<CircuitPair> retro(config, CircuitPair(std::max(circuit.size(), u)));
  Clock clock;
  using Op = RetroOp<CircuitPairEntry>;
  auto member = [&](std::uint64_t g, std::uint64_t k) -> std::optional<CircuitPairEntry> {
    const std::uint64_t i = g * group + k;
    if (i < entries) return CircuitPairEntry{shared, bits_of(i, half)};
    return std::nullopt;
  };

  std::vector<TimeKey> placeholders(group);
  for (std::uint64_t k = 0; k < group; ++k) {
    placeholders[k] = clock.tick();
    retro.insert(placeholders[k], Op{1, static_cast<SlotIndex>(k), std::nullopt});
  }
  std::vector<TimeKey> group_done(groups);
  for (std::uint64_t j = 0; j < groups; ++j) {
    for (std::uint64_t k = 0; k < group; ++k) {
      group_done[j] = clock.tick();
      retro.insert(group_done[j], Op{2, static_cast<SlotIndex>(k), member(j, k)});
    }
  }

  bool satisfiable = false;
  for (std::uint64_t i = 0; i < groups; ++i) {
    for (std::uint64_t k = 0; k < group; ++k)
      retro.replace(placeholders[k], Op{1, static_cast<SlotIndex>(k), member(i, k)});
    for (std::uint64_t j = 0; j < groups; ++j) satisfiable = retro.query(group_done[j]) || satisfiable;
  }
  retro.report(census);
  return satisfiable;
}

bool brute_csat(const CircuitDesc& circuit) {
  const std::size_t u = circuit.num_inputs();
  if (u > 40) throw Error(ErrorCode::InvalidOp, "too many inputs for enumeration");
  for (std::uint64_t x = 0; x < (std::uint64_t{1} << u); ++x)
    if (eval_circuit(circuit, bits_of(x, u))) return true;
  return false;
}

// ---------------------------------------------------------------------------

MinPlusInstance random_minplus_instance(std::size_t n, unsigned c, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::int64_t> value(0, ipow(static_cast<std::int64_t>(n), c));
  MinPlusInstance inst;
  inst.matrix.assign(n, IntVector(n));
  inst.vectors.assign(n, IntVector(n));
  for (auto& row : inst.matrix)
    for (auto& x : row) x = value(rng);
  for (auto& v : inst.vectors)
    for (auto& x : v) x = value(rng);
  return inst;
}

ThreeSumInstance random_3sum_instance(std::size_t n, unsigned q, bool planted, std::mt19937_64& rng) {
  const std::int64_t bound = ipow(static_cast<std::int64_t>(std::max<std::size_t>(n, 1)), q);
  std::uniform_int_distribution<std::int64_t> value(-bound, bound);
  auto distinct = [&](std::size_t count) {
    std::set<std::int64_t> seen;
    IntVector out;
    while (out.size() < count) {
      const std::int64_t x = value(rng);
      if (seen.insert(x).second) out.push_back(x);
    }
    return out;
  };

  ThreeSumInstance inst{distinct(n), distinct(n), distinct(n)};
  if (!planted || n == 0) return inst;
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);
  for (int attempt = 0; attempt < 1000; ++attempt) {
    const std::int64_t target = -(inst.a[pick(rng)] + inst.b[pick(rng)]);
    if (target < -bound || target > bound) continue;
    if (std::find(inst.c.begin(), inst.c.end(), target) != inst.c.end()) return inst;
    inst.c[pick(rng)] = target;
    return inst;
  }
  return inst;
}

CircuitDesc random_circuit(std::size_t inputs, std::size_t max_size, bool contradiction, std::mt19937_64& rng) {
  std::vector<Gate> gs;
  for (std::size_t i = 0; i < inputs; ++i) gs.push_back(gates::in(i));
  if (gs.empty()) gs.push_back(gates::one());

  const std::size_t reserve = contradiction ? 3 : 0;
  const std::size_t budget = max_size > gs.size() + reserve ? max_size - gs.size() - reserve : 0;
  std::uniform_int_distribution<std::size_t> extra(budget == 0 ? 0 : 1, budget);
  const std::size_t count = extra(rng);
  std::uniform_int_distribution<int> kind(0, 9);
  for (std::size_t i = 0; i < count; ++i) {
    const std::size_t here = gs.size();
    // Favour recent gates so the output depends on most of the circuit.
    std::uniform_int_distribution<std::size_t> any(0, here - 1);
    std::uniform_int_distribution<std::size_t> recent(here > 4 ? here - 4 : 0, here - 1);
    const std::size_t g = recent(rng);
    const std::size_t h = any(rng);
    const int k = kind(rng);
    if (k < 2) {
      gs.push_back(gates::not_(g));
    } else if (k < 6) {
      gs.push_back(gates::and_(g, h));
    } else {
      gs.push_back(gates::or_(g, h));
    }
  }
  if (contradiction) {
    const std::size_t out = gs.size() - 1;
    std::uniform_int_distribution<std::size_t> any(0, out);
    const std::size_t g = any(rng);
    gs.push_back(gates::not_(g));
    gs.push_back(gates::and_(g, gs.size() - 1));
    gs.push_back(gates::and_(out, gs.size() - 1));
  }
  return CircuitDesc(inputs, std::move(gs));
}

}  // namespace retro
