#include "conformal/error.hpp"

namespace conformal {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::NotPositiveDefinite: return "NotPositiveDefinite";
    case ErrorCode::SingularPoint: return "SingularPoint";
    case ErrorCode::QuadratureNotConverged: return "QuadratureNotConverged";
    case ErrorCode::NotInGroup: return "NotInGroup";
    case ErrorCode::BlockSingular: return "BlockSingular";
    case ErrorCode::NumericalSingularity: return "NumericalSingularity";
    case ErrorCode::BoundaryPole: return "BoundaryPole";
    case ErrorCode::PoleOnShilov: return "PoleOnShilov";
    case ErrorCode::ChartSingularity: return "ChartSingularity";
    case ErrorCode::StepTooSmall: return "StepTooSmall";
    case ErrorCode::InvalidGrid: return "InvalidGrid";
    case ErrorCode::UnknownSuite: return "UnknownSuite";
  }
  return "Unknown";
}

}  // namespace conformal
