#pragma once

#include <stdexcept>
#include <string>

namespace dpwave {

// Library-wide failure categories.  Numeric modules throw these; the CLI
// maps them to exit code 1 with a machine-readable record.
enum class ErrorCode {
  out_of_range,
  degenerate,
  non_convergence,
  lambda_too_large,
  stencil_outside_region,
  sign_pattern_unexpected,
  no_root,
  out_of_energy_range,
  near_critical_b,
  tolerance_ambiguous,
  zero_polynomial,
  usage,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

inline const char* error_name(ErrorCode c) {
  switch (c) {
    case ErrorCode::out_of_range: return "OutOfRange";
    case ErrorCode::degenerate: return "Degenerate";
    case ErrorCode::non_convergence: return "NonConvergence";
    case ErrorCode::lambda_too_large: return "LambdaTooLarge";
    case ErrorCode::stencil_outside_region: return "StencilOutsideRegion";
    case ErrorCode::sign_pattern_unexpected: return "SignPatternUnexpected";
    case ErrorCode::no_root: return "NoRoot";
    case ErrorCode::out_of_energy_range: return "OutOfEnergyRange";
    case ErrorCode::near_critical_b: return "NearCriticalB";
    case ErrorCode::tolerance_ambiguous: return "ToleranceAmbiguous";
    case ErrorCode::zero_polynomial: return "ZeroPolynomial";
    case ErrorCode::usage: return "Usage";
  }
  return "Unknown";
}

}  // namespace dpwave
