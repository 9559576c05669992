#include "theta/errors.hpp"

namespace theta {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::EmptySequence: return "EmptySequence";
    case ErrorCode::EndpointNotZero: return "EndpointNotZero";
    case ErrorCode::StepNotOne: return "StepNotOne";
    case ErrorCode::InvalidUpDown: return "InvalidUpDown";
    case ErrorCode::InvalidTree: return "InvalidTree";
    case ErrorCode::ZeroDimensional: return "ZeroDimensional";
    case ErrorCode::MalformedComplex: return "MalformedComplex";
    case ErrorCode::NotChainComplex: return "NotChainComplex";
    case ErrorCode::NotAugmentedComplex: return "NotAugmentedComplex";
    case ErrorCode::ShapeMismatch: return "ShapeMismatch";
    case ErrorCode::NegativeEntry: return "NegativeEntry";
    case ErrorCode::NotChainMap: return "NotChainMap";
    case ErrorCode::NotAugmented: return "NotAugmented";
    case ErrorCode::SourceTargetMismatch: return "SourceTargetMismatch";
    case ErrorCode::MixedDegrees: return "MixedDegrees";
    case ErrorCode::WrongDegree: return "WrongDegree";
    case ErrorCode::NotSeparated: return "NotSeparated";
    case ErrorCode::NotComparable: return "NotComparable";
    case ErrorCode::Condition1Violated: return "Condition1Violated";
    case ErrorCode::Condition2Violated: return "Condition2Violated";
    case ErrorCode::NotSimple: return "NotSimple";
    case ErrorCode::BadAugmentation: return "BadAugmentation";
    case ErrorCode::BoundaryMismatch: return "BoundaryMismatch";
    case ErrorCode::InfiniteSupport: return "InfiniteSupport";
    case ErrorCode::NotComposable: return "NotComposable";
    case ErrorCode::NotUnital: return "NotUnital";
    case ErrorCode::NotCochainMap: return "NotCochainMap";
    case ErrorCode::NotCoaugmented: return "NotCoaugmented";
    case ErrorCode::InvalidWreathMorphism: return "InvalidWreathMorphism";
    case ErrorCode::ComponentOutsidePhi: return "ComponentOutsidePhi";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& detail)
    : std::runtime_error(std::string(to_string(code)) + ": " + detail),
      code_(code) {}

}  // namespace theta
