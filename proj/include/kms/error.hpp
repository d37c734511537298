#pragma once

#include <stdexcept>
#include <string>

namespace kms {

enum class ErrorCode {
  NotReflectable,
  NotAGCM,
  ParameterizedInput,
  NotDEquivalent,
  PathBreaks,
  NotKacMoody,
  InfiniteSystem,
  NotAffine,
  NotSymmetrizable,
  InvalidParameters,
  Decomposable,
  NoOracle,
  NotAnAutomorphism,
  NotInPositiveCone,
  ParseError,
  FieldMismatch,
  ReducibleMinpoly,
  Unsupported,
  Overflow,
  Internal,
};

inline const char* error_name(ErrorCode c) {
  switch (c) {
    case ErrorCode::NotReflectable: return "NotReflectable";
    case ErrorCode::NotAGCM: return "NotAGCM";
    case ErrorCode::ParameterizedInput: return "ParameterizedInput";
    case ErrorCode::NotDEquivalent: return "NotDEquivalent";
    case ErrorCode::PathBreaks: return "PathBreaks";
    case ErrorCode::NotKacMoody: return "NotKacMoody";
    case ErrorCode::InfiniteSystem: return "InfiniteSystem";
    case ErrorCode::NotAffine: return "NotAffine";
    case ErrorCode::NotSymmetrizable: return "NotSymmetrizable";
    case ErrorCode::InvalidParameters: return "InvalidParameters";
    case ErrorCode::Decomposable: return "Decomposable";
    case ErrorCode::NoOracle: return "NoOracle";
    case ErrorCode::NotAnAutomorphism: return "NotAnAutomorphism";
    case ErrorCode::NotInPositiveCone: return "NotInPositiveCone";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::FieldMismatch: return "FieldMismatch";
    case ErrorCode::ReducibleMinpoly: return "ReducibleMinpoly";
    case ErrorCode::Unsupported: return "Unsupported";
    case ErrorCode::Overflow: return "Overflow";
    case ErrorCode::Internal: return "Internal";
  }
  return "Unknown";
}

/// Domain error carrying a stable code.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_name(code)) + ": " + what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

}  // namespace kms
