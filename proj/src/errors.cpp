#include "ahym/errors.hpp"

namespace ahym {

const char* to_string(ErrorCode c) {
  switch (c) {
    case ErrorCode::DimensionTooLow: return "DimensionTooLow";
    case ErrorCode::BadGrid: return "BadGrid";
    case ErrorCode::NonFinite: return "NonFinite";
    case ErrorCode::UnsupportedDimension: return "UnsupportedDimension";
    case ErrorCode::QuadratureTooCoarse: return "QuadratureTooCoarse";
    case ErrorCode::DegreeMismatch: return "DegreeMismatch";
    case ErrorCode::DegreeOverflow: return "DegreeOverflow";
    case ErrorCode::DegreeUnsupported: return "DegreeUnsupported";
    case ErrorCode::NonFiniteField: return "NonFiniteField";
    case ErrorCode::NoBoundaryLimit: return "NoBoundaryLimit";
    case ErrorCode::SingularLeadingCoefficient: return "SingularLeadingCoefficient";
    case ErrorCode::RootOnCriticalLine: return "RootOnCriticalLine";
    case ErrorCode::NormalComponentPresent: return "NormalComponentPresent";
    case ErrorCode::NotUnitary: return "NotUnitary";
    case ErrorCode::NoConvergence: return "NoConvergence";
    case ErrorCode::LinearSolveFailure: return "LinearSolveFailure";
    case ErrorCode::WeightOutsideWindow: return "WeightOutsideWindow";
    case ErrorCode::IllConditioned: return "IllConditioned";
    case ErrorCode::NewtonDiverged: return "NewtonDiverged";
    case ErrorCode::KernelDetected: return "KernelDetected";
    case ErrorCode::FieldTooSmall: return "FieldTooSmall";
    case ErrorCode::UnknownKey: return "UnknownKey";
    case ErrorCode::OutOfRange: return "OutOfRange";
    case ErrorCode::MissingRequired: return "MissingRequired";
  }
  return "UnknownError";
}

} // namespace ahym
