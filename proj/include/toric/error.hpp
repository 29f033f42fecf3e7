#pragma once

#include <exception>
#include <string>
#include <utility>

namespace toric {

enum class ErrorCode {
  ZeroVector,
  InvalidCone,
  NotFullDimensional,
  InvalidFan,
  NotARefinement,
  RayOrderMismatch,
  PointOutsideSupport,
  NonPrimitivePoint,
  StrongnessUnachieved,
  InvalidSpec,
  DegreeOutsideDualCone,
  UnsupportedNonSimplicial,
  NoSingularLocus,
  PBelowC,
  WitnessSearchExhausted,
  LemmaViolation,
  CrosscheckFailure,
  MalformedInput,
  Internal,
};

inline const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::ZeroVector: return "zero_vector";
    case ErrorCode::InvalidCone: return "invalid_cone";
    case ErrorCode::NotFullDimensional: return "not_full_dimensional";
    case ErrorCode::InvalidFan: return "invalid_fan";
    case ErrorCode::NotARefinement: return "not_a_refinement";
    case ErrorCode::RayOrderMismatch: return "ray_order_mismatch";
    case ErrorCode::PointOutsideSupport: return "point_outside_support";
    case ErrorCode::NonPrimitivePoint: return "non_primitive_point";
    case ErrorCode::StrongnessUnachieved: return "strongness_unachieved";
    case ErrorCode::InvalidSpec: return "invalid_spec";
    case ErrorCode::DegreeOutsideDualCone: return "degree_outside_dual_cone";
    case ErrorCode::UnsupportedNonSimplicial: return "unsupported_non_simplicial";
    case ErrorCode::NoSingularLocus: return "no_singular_locus";
    case ErrorCode::PBelowC: return "p_below_c";
    case ErrorCode::WitnessSearchExhausted: return "witness_search_exhausted";
    case ErrorCode::LemmaViolation: return "lemma_violation";
    case ErrorCode::CrosscheckFailure: return "crosscheck_failure";
    case ErrorCode::MalformedInput: return "malformed_input";
    case ErrorCode::Internal: return "internal";
  }
  return "unknown";
}

/// Structured failure. Library operations never terminate the process: every
/// precondition or consistency violation is thrown as an Error carrying a
/// machine-readable code, so callers (the verifier, the CLI) can convert it
/// into reports or exit codes.
class Error : public std::exception {
 public:
  Error(ErrorCode code, std::string message, std::string details = {})
      : code_(code), details_(std::move(details)) {
    what_ = std::string(error_code_name(code_)) + ": " + std::move(message);
    if (!details_.empty()) what_ += " (" + details_ + ")";
  }

  ErrorCode code() const noexcept { return code_; }
  const std::string& details() const noexcept { return details_; }
  const char* what() const noexcept override { return what_.c_str(); }

 private:
  ErrorCode code_;
  std::string details_;
  std::string what_;
};

[[noreturn]] inline void fail(ErrorCode code, std::string message,
                              std::string details = {}) {
  throw Error(code, std::move(message), std::move(details));
}

}  // namespace toric
