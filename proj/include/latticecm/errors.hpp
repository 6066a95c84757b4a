#ifndef LATTICECM_ERRORS_HPP
#define LATTICECM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace latticecm {

enum class ErrorCode {
  ParseError,
  NotFullRank,
  ZeroRow,
  AmbientTooSmall,
  DimensionMismatch,
  WrongCodim,
  ZeroPoint,
  NotPositive,
  QuadrantNotCovered,
  NotImbalanced,
  TooFewRays,
  DegenerateTransform,
  InvalidField,
  SearchExhausted,
  InvalidArgument,
  VerificationFailed,
  Internal
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

inline const char* error_code_name(ErrorCode c) {
  switch (c) {
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::NotFullRank: return "NotFullRank";
    case ErrorCode::ZeroRow: return "ZeroRow";
    case ErrorCode::AmbientTooSmall: return "AmbientTooSmall";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::WrongCodim: return "WrongCodim";
    case ErrorCode::ZeroPoint: return "ZeroPoint";
    case ErrorCode::NotPositive: return "NotPositive";
    case ErrorCode::QuadrantNotCovered: return "QuadrantNotCovered";
    case ErrorCode::NotImbalanced: return "NotImbalanced";
    case ErrorCode::TooFewRays: return "TooFewRays";
    case ErrorCode::DegenerateTransform: return "DegenerateTransform";
    case ErrorCode::InvalidField: return "InvalidField";
    case ErrorCode::SearchExhausted: return "SearchExhausted";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::VerificationFailed: return "VerificationFailed";
    case ErrorCode::Internal: return "Internal";
  }
  return "Unknown";
}

}  // namespace latticecm

#endif  // LATTICECM_ERRORS_HPP
