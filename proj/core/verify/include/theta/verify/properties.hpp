#ifndef THETA_VERIFY_PROPERTIES_HPP
#define THETA_VERIFY_PROPERTIES_HPP

// Exhaustive property checks over small objects. Each check returns the
// cardinalities it observed so that runs under the two conventions can be
// compared number for number.

#include <cstddef>
#include <string>
#include <vector>

#include "theta/simple_complex.hpp"
#include "theta/wreath.hpp"

namespace theta::verify {

struct PropertyResult {
  std::string module;
  std::string name;
  bool passed = true;
  std::string detail;
  std::vector<std::size_t> counts;
};

std::vector<SimpleADC> catalog_objects(Convention convention);
/// One object per dimension sequence of length <= max_length.
std::vector<SimpleADC> objects_up_to(std::size_t max_length, Convention convention);
/// The unique wreath object whose V-image is k: split at the interior zeros
/// and shift every piece down by one.
WreathObject wreath_decomposition(const SimpleADC& k);

// core_representations
PropertyResult prop_round_trips(std::size_t max_length);
PropertyResult prop_reference_sequence();
PropertyResult prop_globularity(std::size_t max_length);
PropertyResult prop_unit_steps(std::size_t max_length);

// adc_core
PropertyResult prop_chain_laws(Convention convention);
PropertyResult prop_strong_implies_loop_free(Convention convention);
PropertyResult prop_unital_points(Convention convention);
PropertyResult prop_zero_augmentation_forces_zero(Convention convention);

// simple_adc
PropertyResult prop_simple_bases(std::size_t max_length, Convention convention);
PropertyResult prop_theta1_counts(std::size_t max_arrows, Convention convention);
PropertyResult prop_separated_images(std::size_t max_total_size, Convention convention);
PropertyResult prop_hom_oracle(const std::vector<SimpleADC>& objects, int bound);
PropertyResult prop_order_characterizations(const std::vector<SimpleADC>& objects);
PropertyResult prop_bridge_characterizations(const std::vector<SimpleADC>& objects);
PropertyResult prop_composition_closure(const std::vector<SimpleADC>& objects);

// omega_cells
PropertyResult prop_cell_counts(Convention convention, int cap);
PropertyResult prop_cell_oracle(const std::vector<SimpleADC>& objects, int cap);
PropertyResult prop_cell_axioms(const std::vector<SimpleADC>& objects, int cap);
PropertyResult prop_cell_category_laws(const std::vector<SimpleADC>& objects, int cap);
PropertyResult prop_atom_boundaries(const std::vector<SimpleADC>& objects);
PropertyResult prop_nu_functorial(const std::vector<SimpleADC>& objects, int cap);
PropertyResult prop_cell_stabilization(const std::vector<SimpleADC>& objects);

// disc_duality
PropertyResult prop_double_transpose(const std::vector<SimpleADC>& objects);
PropertyResult prop_disc_hom_counts(const std::vector<SimpleADC>& objects);
PropertyResult prop_window_formula(const std::vector<SimpleADC>& objects);

// wreath_product
PropertyResult prop_v_shape(std::size_t max_length, Convention convention);
PropertyResult prop_v_preserves_bases(Convention convention);
PropertyResult prop_v_functorial(std::size_t max_v_size, Convention convention);
PropertyResult prop_fully_faithful(std::size_t max_v_size, Convention convention);
PropertyResult prop_filtration(int max_depth, std::size_t cap, Convention convention);
PropertyResult prop_filtration_covers_catalog(Convention convention);

struct SuiteOptions {
  Convention convention = Convention::standard;
  int cell_cap = 1;
};

/// Every property above over the catalog scopes, one result per property.
/// Exceptions inside a property are reported as its failure.
std::vector<PropertyResult> run_suite(const SuiteOptions& options);

}  // namespace theta::verify

#endif  // THETA_VERIFY_PROPERTIES_HPP
