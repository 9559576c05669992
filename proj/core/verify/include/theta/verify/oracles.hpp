#ifndef THETA_VERIFY_ORACLES_HPP
#define THETA_VERIFY_ORACLES_HPP

// Slow reference computations. None of them call the enumerators they are
// used to check.

#include <cstddef>
#include <vector>

#include "theta/cells.hpp"
#include "theta/complex.hpp"
#include "theta/morphism.hpp"
#include "theta/simple_complex.hpp"

namespace theta::verify {

/// What a candidate map must do to the augmentation of each degree-0 basis
/// element: keep it, or send it to zero.
enum class AugmentationLaw { preserve, annihilate };

/// Every nonnegative chain map K -> L with entries in [0, bound] obeying
/// `law`, found by trying every column vector. Sorted. Under `preserve` each
/// result is also passed through validate_morphism_general().
std::vector<ChainMorphism> brute_force_hom(const ComplexPtr& k, const ComplexPtr& l, int bound = 1,
                                           AugmentationLaw law = AugmentationLaw::preserve);

/// Nondecreasing maps {0..a-1} -> {0..b-1}, counted one by one.
std::size_t monotone_map_count(std::size_t a, std::size_t b);

/// Dyck paths of semilength 0..(max_length-1)/2, i.e. sum of Catalan numbers.
std::size_t dimension_sequence_count(std::size_t max_length);

/// Every double sequence of full length top_degree+1 with coefficients in
/// [0, cap] accepted by make_cell(). Sorted, duplicates removed.
std::vector<Cell> brute_force_cells(const ComplexPtr& k, int cap = 1);

/// The column of b under f is 0/1, of one degree, and consecutive members of
/// its support enclose a lower-dimensional element of L. Reads dimensions
/// straight off the sequence.
bool column_is_separated(const SimpleADC& l, const ChainMorphism& f, BasisIndex b);

}  // namespace theta::verify

#endif  // THETA_VERIFY_ORACLES_HPP
