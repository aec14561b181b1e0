#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace slc {

// Stable machine-readable error taxonomy shared by every module. The names
// returned by code_name() are part of the CLI/JSON contract; do not rename.
enum class ErrorCode {
  InvalidArgument,
  InvalidMatrix,
  // cusp
  InvalidCycle,
  TraceTooSmall,
  CoverTooLarge,
  // plumbing
  InvalidGraph,
  LoopUnsupported,
  // quotient-cusp
  InvalidQuotientCuspData,
  DegenerateCover,
  TupleNotValid,
  // pinkham
  InvalidTriple,
  // cyclic quotients
  NotCoprime,
  NotClassT,
  // hypersurface
  DegreeTooSmall,
  AmbiguousRank,
  InconsistentSequence,
  // donaldson
  RayOnExistingRay,
  RayOutsideSupport,
  RayNotFound,
  MergeNotConvex,
  InvalidFan,
  ZeroPairing,
};

std::string_view code_name(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace slc
