#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

namespace qmono {

// Every domain failure carries a stable name so the CLI can report it and
// tests can match on it without parsing the message.
enum class ErrorKind {
  MalformedWord,
  OddParityClaim,
  ZeroCoefficientVector,
  UndersampledLoop,
  AsymptoticSample,
  BranchAmbiguity,
  PunctureCollision,
  DimensionTooSmall,
  NotClosed,
  NotGeneralPosition,
  BadParameters,
  NegativeDimension,
  ArithmeticOverflow,
  MalformedLoop,
};

const char* error_name(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what,
        std::optional<std::size_t> sample_index = std::nullopt);

  ErrorKind kind() const noexcept { return kind_; }
  const char* name() const noexcept { return error_name(kind_); }
  // Offending sample, when the failure is tied to one.
  std::optional<std::size_t> sample_index() const noexcept { return index_; }

 private:
  ErrorKind kind_;
  std::optional<std::size_t> index_;
};

}  // namespace qmono
