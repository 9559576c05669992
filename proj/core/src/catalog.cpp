#include "theta/catalog.hpp"

namespace theta {

const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> entries = {
      {"point", DimensionSequence({0})},
      {"arrow", DimensionSequence({0, 1, 0})},
      {"arrow-pair", DimensionSequence({0, 1, 0, 1, 0})},
      {"globe-2", DimensionSequence({0, 1, 2, 1, 0})},
      {"globe-2-pair", DimensionSequence({0, 1, 2, 1, 2, 1, 0})},
      {"globe-3", DimensionSequence({0, 1, 2, 3, 2, 1, 0})},
      {"tree-17", DimensionSequence({0, 1, 2, 1, 2, 3, 4, 3, 2, 3, 4, 3, 2, 1, 0, 1, 0})},
  };
  return entries;
}

ComplexPtr two_arrow_cycle() {
  // Basis order a, b, x, y.
  ComplexData data;
  data.degrees = {0, 0, 1, 1};
  data.boundaries = {Chain(-1), Chain(-1), Chain(0, {{1, 1}, {0, -1}}), Chain(0, {{0, 1}, {1, -1}})};
  data.augmentation = {1, 1, 0, 0};
  return make_complex(std::move(data));
}

}  // namespace theta
