#include "martensite/error.hpp"

namespace martensite {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorCode::DegreeTooHigh: return "DegreeTooHigh";
    case ErrorCode::MixedField: return "MixedField";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::TraceMismatch: return "TraceMismatch";
    case ErrorCode::NotTraceZero: return "NotTraceZero";
    case ErrorCode::InvalidParams: return "InvalidParams";
    case ErrorCode::DegenerateParams: return "DegenerateParams";
    case ErrorCode::FlatPolytope: return "FlatPolytope";
    case ErrorCode::FamilyNotClosed: return "FamilyNotClosed";
    case ErrorCode::DependentBasis: return "DependentBasis";
    case ErrorCode::NotT3: return "NotT3";
    case ErrorCode::MultipleRootsInUnitInterval: return "MultipleRootsInUnitInterval";
    case ErrorCode::IncompatibleCenter: return "IncompatibleCenter";
    case ErrorCode::DegenerateLambda: return "DegenerateLambda";
    case ErrorCode::DegenerateT3: return "DegenerateT3";
    case ErrorCode::InsufficientSamples: return "InsufficientSamples";
    case ErrorCode::UnknownMaterial: return "UnknownMaterial";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::Unsupported: return "Unsupported";
  }
  return "Unknown";
}

}  // namespace martensite
