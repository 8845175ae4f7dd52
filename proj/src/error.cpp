#include "poim/error.hpp"

namespace poim {

std::string_view toString(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotTotal: return "NotTotal";
    case ErrorCode::NotHomomorphism: return "NotHomomorphism";
    case ErrorCode::ViolatesFixing: return "ViolatesFixing";
    case ErrorCode::HasVariables: return "HasVariables";
    case ErrorCode::InvalidInclusion: return "InvalidInclusion";
    case ErrorCode::CodomainHasVariables: return "CodomainHasVariables";
    case ErrorCode::UnboundVariables: return "UnboundVariables";
    case ErrorCode::EmptyProjection: return "EmptyProjection";
    case ErrorCode::NotRelational: return "NotRelational";
    case ErrorCode::BlanksInPattern: return "BlanksInPattern";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::Syntax: return "Syntax";
    case ErrorCode::VariableInData: return "VariableInData";
    case ErrorCode::ReservedBlankPrefix: return "ReservedBlankPrefix";
    case ErrorCode::DuplicateProjectionVar: return "DuplicateProjectionVar";
    case ErrorCode::ProjectionNotInPattern: return "ProjectionNotInPattern";
    case ErrorCode::NotRdfGraph: return "NotRdfGraph";
  }
  return "Unknown";
}

}  // namespace poim
