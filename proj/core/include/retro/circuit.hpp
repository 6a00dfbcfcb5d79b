#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace retro {

enum class GateKind : std::uint8_t { Input, Const0, Const1, Not, And, Or };

struct Gate {
  GateKind kind = GateKind::Const0;
  std::size_t a = 0;  // input number for Input, first operand otherwise
  std::size_t b = 0;  // second operand for And / Or

  friend bool operator==(const Gate&, const Gate&) = default;
};

/// Gate-list boolean circuit. Gates reference strictly earlier gates and the
/// last gate is the output. Descriptions are compared by their canonical text:
///
///   INPUTS <u>
///   IN <i> | CONST <0|1> | NOT <g> | AND <g> <h> | OR <g> <h>
///
/// one gate per line, newline separated, no trailing newline.
class CircuitDesc {
 public:
  CircuitDesc() = default;
  CircuitDesc(std::size_t num_inputs, std::vector<Gate> gates);

  /// Parses netlist text. Syntax errors throw ParseError; structurally
  /// malformed gates (forward references, input numbers >= u) are accepted
  /// here and reported by well_formed().
  static CircuitDesc parse(std::string_view text);

  std::size_t num_inputs() const noexcept { return num_inputs_; }
  std::size_t size() const noexcept { return gates_.size(); }
  const std::vector<Gate>& gates() const noexcept { return gates_; }
  const std::string& text() const noexcept { return text_; }
  bool well_formed() const noexcept;

  friend bool operator==(const CircuitDesc& x, const CircuitDesc& y) { return x.text_ == y.text_; }

 private:
  std::size_t num_inputs_ = 0;
  std::vector<Gate> gates_;
  std::string text_;
};

std::string serialize(const CircuitDesc& circuit);

/// Evaluates the output gate. `input` is a string of '0'/'1' of length
/// num_inputs (ArityMismatch otherwise); MalformedCircuit on bad operands.
bool eval_circuit(const CircuitDesc& circuit, std::string_view input);

/// Entry of the circuit-pair lists: a shared circuit plus a bit string.
struct CircuitPairEntry {
  std::shared_ptr<const CircuitDesc> circuit;
  std::string bits;

  friend bool operator==(const CircuitPairEntry& x, const CircuitPairEntry& y) {
    if (x.bits != y.bits) return false;
    if (x.circuit == y.circuit) return true;
    return x.circuit && y.circuit && *x.circuit == *y.circuit;
  }
};

/// (C1, x1) and (C2, x2) are good iff C1 and C2 have identical descriptions,
/// C2 is well formed with at most `max_size` gates and exactly |x1| + |x2|
/// inputs, and C2(x1 ++ x2) = 1. Both bit strings must also fit in max_size.
bool is_good_pair(const CircuitPairEntry& first, const CircuitPairEntry& second, std::size_t max_size);

/// Gate-level builders, mostly for tests and generators.
namespace gates {
inline Gate in(std::size_t i) { return {GateKind::Input, i, 0}; }
inline Gate zero() { return {GateKind::Const0, 0, 0}; }
inline Gate one() { return {GateKind::Const1, 0, 0}; }
inline Gate not_(std::size_t g) { return {GateKind::Not, g, 0}; }
inline Gate and_(std::size_t g, std::size_t h) { return {GateKind::And, g, h}; }
inline Gate or_(std::size_t g, std::size_t h) { return {GateKind::Or, g, h}; }
}  // namespace gates

}  // namespace retro
