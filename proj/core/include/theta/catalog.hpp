#ifndef THETA_CATALOG_HPP
#define THETA_CATALOG_HPP

#include <string>
#include <vector>

#include "theta/complex.hpp"
#include "theta/representations.hpp"

namespace theta {

struct CatalogEntry {
  std::string name;
  DimensionSequence dims;
};

/// Fixed objects used by the property suite:
/// (0), (0,1,0), (0,1,0,1,0), (0,1,2,1,0), (0,1,2,1,2,1,0), (0,1,2,3,2,1,0)
/// and a 17-element object reaching dimension 4.
const std::vector<CatalogEntry>& catalog();

/// Points a, b and arrows x, y with d x = b - a, d y = a - b. Unital but
/// neither loop-free nor strongly loop-free.
ComplexPtr two_arrow_cycle();

}  // namespace theta

#endif  // THETA_CATALOG_HPP
