#include <iostream>

#include "theta/verify/acceptance.hpp"

int main() {
  bool all = true;
  for (const auto& c : theta::verify::run_acceptance()) {
    std::cout << theta::verify::format_criterion(c) << std::endl;
    all = all && c.passed;
  }
  return all ? 0 : 1;
}
