#include "qmono/errors.hpp"

namespace qmono {

const char* error_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::MalformedWord: return "MalformedWord";
    case ErrorKind::OddParityClaim: return "OddParityClaim";
    case ErrorKind::ZeroCoefficientVector: return "ZeroCoefficientVector";
    case ErrorKind::UndersampledLoop: return "UndersampledLoop";
    case ErrorKind::AsymptoticSample: return "AsymptoticSample";
    case ErrorKind::BranchAmbiguity: return "BranchAmbiguity";
    case ErrorKind::PunctureCollision: return "PunctureCollision";
    case ErrorKind::DimensionTooSmall: return "DimensionTooSmall";
    case ErrorKind::NotClosed: return "NotClosed";
    case ErrorKind::NotGeneralPosition: return "NotGeneralPosition";
    case ErrorKind::BadParameters: return "BadParameters";
    case ErrorKind::NegativeDimension: return "NegativeDimension";
    case ErrorKind::ArithmeticOverflow: return "ArithmeticOverflow";
    case ErrorKind::MalformedLoop: return "MalformedLoop";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& what,
             std::optional<std::size_t> sample_index)
    : std::runtime_error(std::string(error_name(kind)) + ": " + what),
      kind_(kind),
      index_(sample_index) {}

}  // namespace qmono
