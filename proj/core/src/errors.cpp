#include "frobsyz/errors.hpp"

namespace frobsyz {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::RingMismatch: return "RingMismatch";
    case ErrorKind::NonHomogeneous: return "NonHomogeneous";
    case ErrorKind::Overflow: return "Overflow";
    case ErrorKind::InfiniteLength: return "InfiniteLength";
    case ErrorKind::NotMonomial: return "NotMonomial";
    case ErrorKind::SaturationCap: return "SaturationCap";
    case ErrorKind::ComposesNonzero: return "ComposesNonzero";
    case ErrorKind::CompositionBroken: return "CompositionBroken";
    case ErrorKind::HypothesisFails: return "HypothesisFails";
    case ErrorKind::CapExceeded: return "CapExceeded";
    case ErrorKind::SearchExhausted: return "SearchExhausted";
    case ErrorKind::ResourceCap: return "ResourceCap";
    case ErrorKind::EngineInconsistency: return "EngineInconsistency";
    case ErrorKind::Parse: return "ParseError";
  }
  return "Unknown";
}

ParseError::ParseError(std::size_t line, std::size_t column,
                       const std::string& message)
    : Error(ErrorKind::Parse, std::to_string(line) + ":" +
                                  std::to_string(column) + ": " + message),
      line_(line),
      column_(column),
      detail_(message) {}

}  // namespace frobsyz
