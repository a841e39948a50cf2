#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace concentric {

enum class ErrorCode {
  InvalidArgument,
  TriangleInequalityViolated,
  CoincidentCircles,
  InvalidMomentOrder,
  InfeasibleMoments,
  MismatchedOrder,
  CoincidentAuxiliaryCircles,
  NotACandidateCenter,
  NoSharedVertex,
  SumConditionViolated,
  UnsortedRadii,
  DegenerateGeometry,
  InfeasibleFamily,
  PhaseSearchFailed,
};

std::string_view to_string(ErrorCode code);

/// Base exception for every failure raised by the library. The code lets
/// callers branch without parsing messages.
class GeometryError : public std::runtime_error {
 public:
  GeometryError(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace concentric
