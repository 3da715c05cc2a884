#include "idyn/error.hpp"

namespace idyn {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidGroundSet: return "InvalidGroundSet";
    case ErrorCode::SubsetOutOfRange: return "SubsetOutOfRange";
    case ErrorCode::UnknownPoint: return "UnknownPoint";
    case ErrorCode::MissingEmpty: return "MissingEmpty";
    case ErrorCode::MissingFull: return "MissingFull";
    case ErrorCode::NotUnionClosed: return "NotUnionClosed";
    case ErrorCode::NotIntersectionClosed: return "NotIntersectionClosed";
    case ErrorCode::MapNotTotal: return "MapNotTotal";
    case ErrorCode::GroundMismatch: return "GroundMismatch";
    case ErrorCode::ImproperIdeal: return "ImproperIdeal";
    case ErrorCode::DiscontinuousMap: return "DiscontinuousMap";
    case ErrorCode::SizeTooLarge: return "SizeTooLarge";
    case ErrorCode::UnknownFlag: return "UnknownFlag";
    case ErrorCode::Parse: return "Parse";
    case ErrorCode::Usage: return "Usage";
  }
  return "Unknown";
}

}  // namespace idyn
