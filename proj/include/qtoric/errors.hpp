#ifndef QTORIC_ERRORS_HPP
#define QTORIC_ERRORS_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace qtoric {

enum class ErrorCode {
  ArityMismatch,
  DivisionByZero,
  NotProper,
  GradingMismatch,
  MalformedFan,
  NotSimplicial,
  NotSmooth,
  NonPrimitiveRay,
  BadWallIncidence,
  NotProjective,
  NoIsolatedMinimum,
  BasisIncomplete,
  NotGlobal,
  ZeroDenominator,
  InconsistentComposition,
  SingularFrame,
  NonPolynomialUpsilon,
  ZDependentConnection,
  NotProjectiveSpace,
  ParseError,
  InvalidArgument,
};

// Stable machine-readable name, used in reports and exit diagnostics.
std::string_view error_code_name(ErrorCode code) noexcept;

class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

private:
  ErrorCode code_;
};

inline std::string_view error_code_name(ErrorCode code) noexcept {
  switch (code) {
  case ErrorCode::ArityMismatch: return "ArityMismatch";
  case ErrorCode::DivisionByZero: return "DivisionByZero";
  case ErrorCode::NotProper: return "NotProper";
  case ErrorCode::GradingMismatch: return "GradingMismatch";
  case ErrorCode::MalformedFan: return "MalformedFan";
  case ErrorCode::NotSimplicial: return "NotSimplicial";
  case ErrorCode::NotSmooth: return "NotSmooth";
  case ErrorCode::NonPrimitiveRay: return "NonPrimitiveRay";
  case ErrorCode::BadWallIncidence: return "BadWallIncidence";
  case ErrorCode::NotProjective: return "NotProjective";
  case ErrorCode::NoIsolatedMinimum: return "NoIsolatedMinimum";
  case ErrorCode::BasisIncomplete: return "BasisIncomplete";
  case ErrorCode::NotGlobal: return "NotGlobal";
  case ErrorCode::ZeroDenominator: return "ZeroDenominator";
  case ErrorCode::InconsistentComposition: return "InconsistentComposition";
  case ErrorCode::SingularFrame: return "SingularFrame";
  case ErrorCode::NonPolynomialUpsilon: return "NonPolynomialUpsilon";
  case ErrorCode::ZDependentConnection: return "ZDependentConnection";
  case ErrorCode::NotProjectiveSpace: return "NotProjectiveSpace";
  case ErrorCode::ParseError: return "ParseError";
  case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

} // namespace qtoric

#endif
