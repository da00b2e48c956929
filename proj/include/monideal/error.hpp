#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace monideal {

enum class ErrorKind {
  EmptyInput,
  DimensionMismatch,
  InvalidArgument,
  NotPrimary,
  NotComplete,
  NotFinitelySupported,
  DepthExceeded,
  DimensionLimit,
  ReconstructionFailed,
  VerificationFailed,
  Overflow,
  Parse,
  UnknownVariable,
  Malformed,
};

inline const char* to_string(ErrorKind k) {
  switch (k) {
    case ErrorKind::EmptyInput: return "empty_input";
    case ErrorKind::DimensionMismatch: return "dimension_mismatch";
    case ErrorKind::InvalidArgument: return "invalid_argument";
    case ErrorKind::NotPrimary: return "not_m_primary";
    case ErrorKind::NotComplete: return "not_complete";
    case ErrorKind::NotFinitelySupported: return "not_finitely_supported";
    case ErrorKind::DepthExceeded: return "depth_exceeded";
    case ErrorKind::DimensionLimit: return "dimension_limit";
    case ErrorKind::ReconstructionFailed: return "reconstruction_failed";
    case ErrorKind::VerificationFailed: return "verification_failed";
    case ErrorKind::Overflow: return "overflow";
    case ErrorKind::Parse: return "parse_error";
    case ErrorKind::UnknownVariable: return "unknown_variable";
    case ErrorKind::Malformed: return "malformed_document";
  }
  return "error";
}

/// Every failure raised by the library. `operation()` names the public
/// operation that rejected its input so front ends can report it.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, std::string operation, const std::string& message)
      : std::runtime_error(operation + ": " + message),
        kind_(kind),
        operation_(std::move(operation)),
        detail_(message) {}

  ErrorKind kind() const noexcept { return kind_; }
  const std::string& operation() const noexcept { return operation_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  ErrorKind kind_;
  std::string operation_;
  std::string detail_;
};

/// Raised by the fixed-width rational type when an intermediate value no
/// longer fits; callers retry with arbitrary precision.
class OverflowError : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

}  // namespace monideal
