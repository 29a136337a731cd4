#pragma once

#include <stdexcept>
#include <string>

namespace rigidline {

enum class Errc {
  ParseError,
  SchemaError,
  IoError,
  DimensionlessInput,
  NotSymmetric,
  NonFinite,
  IndexMismatch,
  ZeroStress,
  GraphMismatch,
  CountMismatch,
  WrongDimension,
  DependentDirections,
  ShapeMismatch,
  NotIncreasing,
  SearchFailed,
  OrderViolation,
  DegenerateSpan,
  UsageError,
};

const char* errc_name(Errc code);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

/// Thrown when two routes that must agree by theory disagree, or a witness
/// contradicts an exact certificate. The CLI maps this to exit code 3; it is
/// never a recoverable condition.
class InternalInconsistency : public std::logic_error {
 public:
  explicit InternalInconsistency(const std::string& what)
      : std::logic_error("internal inconsistency: " + what) {}
};

inline const char* errc_name(Errc code) {
  switch (code) {
    case Errc::ParseError: return "ParseError";
    case Errc::SchemaError: return "SchemaError";
    case Errc::IoError: return "IoError";
    case Errc::DimensionlessInput: return "DimensionlessInput";
    case Errc::NotSymmetric: return "NotSymmetric";
    case Errc::NonFinite: return "NonFinite";
    case Errc::IndexMismatch: return "IndexMismatch";
    case Errc::ZeroStress: return "ZeroStress";
    case Errc::GraphMismatch: return "GraphMismatch";
    case Errc::CountMismatch: return "CountMismatch";
    case Errc::WrongDimension: return "WrongDimension";
    case Errc::DependentDirections: return "DependentDirections";
    case Errc::ShapeMismatch: return "ShapeMismatch";
    case Errc::NotIncreasing: return "NotIncreasing";
    case Errc::SearchFailed: return "SearchFailed";
    case Errc::OrderViolation: return "OrderViolation";
    case Errc::DegenerateSpan: return "DegenerateSpan";
    case Errc::UsageError: return "UsageError";
  }
  return "Error";
}

}  // namespace rigidline
