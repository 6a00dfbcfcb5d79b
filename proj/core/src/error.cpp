#include "retro/error.hpp"

namespace retro {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::DuplicateTime: return "DuplicateTime";
    case ErrorCode::NoSuchTime: return "NoSuchTime";
    case ErrorCode::InvalidTime: return "InvalidTime";
    case ErrorCode::InvalidOp: return "InvalidOp";
    case ErrorCode::NotEmpty: return "NotEmpty";
    case ErrorCode::ArityMismatch: return "ArityMismatch";
    case ErrorCode::MalformedCircuit: return "MalformedCircuit";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::OddInputCount: return "OddInputCount";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::StreamOrder: return "StreamOrder";
  }
  return "Unknown";
}

}  // namespace retro
