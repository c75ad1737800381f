#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace frobsyz {

enum class ErrorKind {
  InvalidArgument,
  RingMismatch,
  NonHomogeneous,
  Overflow,
  InfiniteLength,
  NotMonomial,
  SaturationCap,
  ComposesNonzero,
  CompositionBroken,
  HypothesisFails,
  CapExceeded,
  SearchExhausted,
  ResourceCap,
  EngineInconsistency,
  Parse,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Base of every exception thrown by the library. The kind drives the CLI
/// exit code and the structured error record in result documents.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& message);

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  std::size_t line_;
  std::size_t column_;
  std::string detail_;
};

}  // namespace frobsyz
