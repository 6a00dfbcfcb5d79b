#include "retro/circuit.hpp"

#include <charconv>

#include "retro/error.hpp"

namespace retro {

namespace {

std::vector<std::string_view> split_words(std::string_view line) {
  std::vector<std::string_view> words;
  std::size_t pos = 0;
  while (pos < line.size()) {
    while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t')) ++pos;
    std::size_t end = pos;
    while (end < line.size() && line[end] != ' ' && line[end] != '\t') ++end;
    if (end > pos) words.push_back(line.substr(pos, end - pos));
    pos = end;
  }
  return words;
}

std::size_t parse_number(std::string_view word, std::size_t line_no) {
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(word.data(), word.data() + word.size(), value);
  if (ec != std::errc{} || ptr != word.data() + word.size())
    throw Error(ErrorCode::ParseError, "line " + std::to_string(line_no) + ": bad number '" + std::string(word) + "'");
  return value;
}

std::string gate_line(const Gate& g) {
  switch (g.kind) {
    case GateKind::Input: return "IN " + std::to_string(g.a);
    case GateKind::Const0: return "CONST 0";
    case GateKind::Const1: return "CONST 1";
    case GateKind::Not: return "NOT " + std::to_string(g.a);
    case GateKind::And: return "AND " + std::to_string(g.a) + " " + std::to_string(g.b);
    case GateKind::Or: return "OR " + std::to_string(g.a) + " " + std::to_string(g.b);
  }
  return {};
}

}  // namespace

CircuitDesc::CircuitDesc(std::size_t num_inputs, std::vector<Gate> gates)
    : num_inputs_(num_inputs), gates_(std::move(gates)) {
  text_ = "INPUTS " + std::to_string(num_inputs_);
  for (const auto& g : gates_) {
    text_ += '\n';
    text_ += gate_line(g);
  }
}

CircuitDesc CircuitDesc::parse(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.push_back(line);
    pos = end + 1;
  }
  while (!lines.empty() && split_words(lines.back()).empty()) lines.pop_back();
  if (lines.empty()) throw Error(ErrorCode::ParseError, "empty netlist");

  auto header = split_words(lines[0]);
  if (header.size() != 2 || header[0] != "INPUTS") throw Error(ErrorCode::ParseError, "line 1: expected 'INPUTS <u>'");
  const std::size_t inputs = parse_number(header[1], 1);

  std::vector<Gate> parsed;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    auto words = split_words(lines[i]);
    const std::size_t line_no = i + 1;
    auto expect = [&](std::size_t n) {
      if (words.size() != n)
        throw Error(ErrorCode::ParseError, "line " + std::to_string(line_no) + ": wrong operand count");
    };
    if (words.empty()) throw Error(ErrorCode::ParseError, "line " + std::to_string(line_no) + ": blank line");
    const std::string_view op = words[0];
    if (op == "IN") {
      expect(2);
      parsed.push_back(gates::in(parse_number(words[1], line_no)));
    } else if (op == "CONST") {
      expect(2);
      if (words[1] == "0") {
        parsed.push_back(gates::zero());
      } else if (words[1] == "1") {
        parsed.push_back(gates::one());
      } else {
        throw Error(ErrorCode::ParseError, "line " + std::to_string(line_no) + ": CONST takes 0 or 1");
      }
    } else if (op == "NOT") {
      expect(2);
      parsed.push_back(gates::not_(parse_number(words[1], line_no)));
    } else if (op == "AND" || op == "OR") {
      expect(3);
      const std::size_t g = parse_number(words[1], line_no);
      const std::size_t h = parse_number(words[2], line_no);
      parsed.push_back(op == "AND" ? gates::and_(g, h) : gates::or_(g, h));
    } else {
      throw Error(ErrorCode::ParseError, "line " + std::to_string(line_no) + ": unknown gate '" + std::string(op) + "'");
    }
  }
  return CircuitDesc(inputs, std::move(parsed));
}

bool CircuitDesc::well_formed() const noexcept {
  if (gates_.empty()) return false;
  for (std::size_t i = 0; i < gates_.size(); ++i) {
    const Gate& g = gates_[i];
    switch (g.kind) {
      case GateKind::Input:
        if (g.a >= num_inputs_) return false;
        break;
      case GateKind::Const0:
      case GateKind::Const1:
        break;
      case GateKind::Not:
        if (g.a >= i) return false;
        break;
      case GateKind::And:
      case GateKind::Or:
        if (g.a >= i || g.b >= i) return false;
        break;
    }
  }
  return true;
}

std::string serialize(const CircuitDesc& circuit) { return circuit.text(); }

bool eval_circuit(const CircuitDesc& circuit, std::string_view input) {
  if (input.size() != circuit.num_inputs())
    throw Error(ErrorCode::ArityMismatch, "circuit takes " + std::to_string(circuit.num_inputs()) + " inputs, got " +
                                              std::to_string(input.size()));
  if (!circuit.well_formed()) throw Error(ErrorCode::MalformedCircuit, "operand refers to a later gate or missing input");

  const auto& gs = circuit.gates();
  std::vector<std::uint8_t> wire(gs.size());
  for (std::size_t i = 0; i < gs.size(); ++i) {
    const Gate& g = gs[i];
    switch (g.kind) {
      case GateKind::Input: wire[i] = input[g.a] == '1'; break;
      case GateKind::Const0: wire[i] = 0; break;
      case GateKind::Const1: wire[i] = 1; break;
      case GateKind::Not: wire[i] = !wire[g.a]; break;
      case GateKind::And: wire[i] = wire[g.a] & wire[g.b]; break;
      case GateKind::Or: wire[i] = wire[g.a] | wire[g.b]; break;
    }
  }
  return wire.back() != 0;
}

bool is_good_pair(const CircuitPairEntry& first, const CircuitPairEntry& second, std::size_t max_size) {
  if (!first.circuit || !second.circuit) return false;
  if (first.circuit != second.circuit && first.circuit->text() != second.circuit->text()) return false;
  const CircuitDesc& c = *second.circuit;
  if (first.bits.size() > max_size || second.bits.size() > max_size) return false;
  if (!c.well_formed() || c.size() > max_size) return false;
  if (c.num_inputs() != first.bits.size() + second.bits.size()) return false;
  return eval_circuit(c, first.bits + second.bits);
}

}  // namespace retro
