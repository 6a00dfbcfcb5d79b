#include "retro/workload.hpp"

#include "retro/reductions.hpp"

namespace retro {

std::string_view to_string(Family family) noexcept {
  switch (family) {
    case Family::MinPlus: return "minplus";
    case Family::ThreeSum: return "3sum";
    case Family::Circuit: return "csat";
  }
  return "unknown";
}

std::optional<Family> parse_family(std::string_view name) noexcept {
  if (name == "minplus") return Family::MinPlus;
  if (name == "3sum") return Family::ThreeSum;
  if (name == "csat") return Family::Circuit;
  return std::nullopt;
}

std::string format_value(const std::optional<std::int64_t>& value) {
  return value ? std::to_string(*value) : std::string("none");
}

std::string format_value(bool value) { return value ? "1" : "0"; }

FamilyTraits<CircuitPair>::FamilyTraits(std::mt19937_64& rng) {
  for (std::size_t inputs : {2, 3, 4}) {
    pool.push_back(std::make_shared<const CircuitDesc>(random_circuit(inputs, inputs + 4, false, rng)));
  }
}

CircuitPairEntry FamilyTraits<CircuitPair>::entry(std::mt19937_64& rng) const {
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  const auto& circuit = pool[pick(rng)];
  std::uniform_int_distribution<std::size_t> length(0, circuit->num_inputs());
  std::bernoulli_distribution bit(0.5);
  std::string bits(length(rng), '0');
  for (auto& b : bits) b = bit(rng) ? '1' : '0';
  return {circuit, std::move(bits)};
}

std::string to_csv_row(const BenchRecord& r) {
  std::string row;
  row += r.family + ',' + r.strategy + ',';
  row += std::to_string(r.n) + ',' + std::to_string(r.m) + ',';
  row += std::to_string(r.updates) + ',' + std::to_string(r.queries) + ',';
  row += std::to_string(r.base_apply_calls) + ',' + std::to_string(r.base_eval_calls) + ',';
  row += std::to_string(r.wall_ns) + ',' + std::to_string(r.seed);
  return row;
}

}  // namespace retro
