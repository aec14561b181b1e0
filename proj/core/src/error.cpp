#include "slc/error.hpp"

namespace slc {

std::string_view code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::InvalidMatrix: return "InvalidMatrix";
    case ErrorCode::InvalidCycle: return "InvalidCycle";
    case ErrorCode::TraceTooSmall: return "TraceTooSmall";
    case ErrorCode::CoverTooLarge: return "CoverTooLarge";
    case ErrorCode::InvalidGraph: return "InvalidGraph";
    case ErrorCode::LoopUnsupported: return "LoopUnsupported";
    case ErrorCode::InvalidQuotientCuspData: return "InvalidQuotientCuspData";
    case ErrorCode::DegenerateCover: return "DegenerateCover";
    case ErrorCode::TupleNotValid: return "TupleNotValid";
    case ErrorCode::InvalidTriple: return "InvalidTriple";
    case ErrorCode::NotCoprime: return "NotCoprime";
    case ErrorCode::NotClassT: return "NotClassT";
    case ErrorCode::DegreeTooSmall: return "DegreeTooSmall";
    case ErrorCode::AmbiguousRank: return "AmbiguousRank";
    case ErrorCode::InconsistentSequence: return "InconsistentSequence";
    case ErrorCode::RayOnExistingRay: return "RayOnExistingRay";
    case ErrorCode::RayOutsideSupport: return "RayOutsideSupport";
    case ErrorCode::RayNotFound: return "RayNotFound";
    case ErrorCode::MergeNotConvex: return "MergeNotConvex";
    case ErrorCode::InvalidFan: return "InvalidFan";
    case ErrorCode::ZeroPairing: return "ZeroPairing";
  }
  return "Unknown";
}

}  // namespace slc
