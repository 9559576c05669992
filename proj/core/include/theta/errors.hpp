#ifndef THETA_ERRORS_HPP
#define THETA_ERRORS_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace theta {

// Every failure the library reports carries one of these codes. The names
// are stable: the CLI prints them and tests match on them.
enum class ErrorCode {
  // core_representations
  EmptySequence,
  EndpointNotZero,
  StepNotOne,
  InvalidUpDown,
  InvalidTree,
  ZeroDimensional,
  // adc_core
  MalformedComplex,
  NotChainComplex,
  NotAugmentedComplex,
  ShapeMismatch,
  NegativeEntry,
  NotChainMap,
  NotAugmented,
  SourceTargetMismatch,
  // simple_adc
  MixedDegrees,
  WrongDegree,
  NotSeparated,
  NotComparable,
  Condition1Violated,
  Condition2Violated,
  NotSimple,
  // omega_cells
  BadAugmentation,
  BoundaryMismatch,
  InfiniteSupport,
  NotComposable,
  NotUnital,
  // disc_duality
  NotCochainMap,
  NotCoaugmented,
  // wreath_product
  InvalidWreathMorphism,
  ComponentOutsidePhi,
  // text formats
  ParseError,
};

std::string_view to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace theta

#endif  // THETA_ERRORS_HPP
