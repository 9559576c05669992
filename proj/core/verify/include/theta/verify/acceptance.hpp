#ifndef THETA_VERIFY_ACCEPTANCE_HPP
#define THETA_VERIFY_ACCEPTANCE_HPP

// The eight acceptance criteria, each a bundle of properties with a pinned
// runtime budget.

#include <string>
#include <vector>

#include "theta/verify/properties.hpp"

namespace theta::verify {

struct CriterionResult {
  int id = 0;
  std::string title;
  bool passed = true;
  std::string detail;
  std::vector<std::size_t> cardinalities;
  double seconds = 0;
  double budget_seconds = 0;
  std::vector<PropertyResult> parts;
};

/// Criteria 1 to 7. Criterion 1 ignores the convention.
CriterionResult run_criterion(int id, Convention convention = Convention::standard);

/// Criterion 8: reruns 2 to 7 under the swapped convention and compares every
/// cardinality with `standard_runs` (the standard results of 2 to 7).
CriterionResult run_convention_robustness(const std::vector<CriterionResult>& standard_runs);

std::vector<CriterionResult> run_acceptance();

/// `PASS [n] title (1.23 s / 10 s): detail`
std::string format_criterion(const CriterionResult& c);

}  // namespace theta::verify

#endif  // THETA_VERIFY_ACCEPTANCE_HPP
