#ifndef THETA_SIMPLE_COMPLEX_HPP
#define THETA_SIMPLE_COMPLEX_HPP

#include <optional>
#include <span>
#include <vector>

#include "theta/complex.hpp"
#include "theta/morphism.hpp"
#include "theta/representations.hpp"

namespace theta {

/// Orientation of the boundary of a simple complex.
///
/// standard: d b = (first lower element after b) - (last lower element before b).
/// swapped:  the negative of that, i.e. the two labels exchanged.
///
/// Negating every boundary is an isomorphism of hom-sets, so all counts agree
/// under both conventions.
enum class Convention { standard, swapped };

constexpr int orientation(Convention c) noexcept { return c == Convention::standard ? 1 : -1; }

/// An augmented directed complex generated by a simple globular set. The basis
/// is the continuously graded ordered set itself, in order.
class SimpleADC {
 public:
  explicit SimpleADC(DimensionSequence dims, Convention convention = Convention::standard);

  /// Recognises `k` as the simple complex of its own degree sequence under
  /// `convention`; keeps the given pointer so morphisms built on it compose.
  static std::optional<SimpleADC> recognize(ComplexPtr k, Convention convention);

  const DimensionSequence& dims() const noexcept { return dims_; }
  Convention convention() const noexcept { return convention_; }
  const ComplexPtr& complex() const noexcept { return complex_; }
  std::size_t size() const noexcept { return dims_.size(); }
  int dimension(Element x) const { return dims_[x]; }

  /// Is there an element of dimension < n strictly between a and b?
  bool encloses_lower(Element a, Element b, int n) const;

 private:
  SimpleADC(DimensionSequence dims, Convention convention, ComplexPtr complex);

  DimensionSequence dims_;
  Convention convention_;
  ComplexPtr complex_;
};

SimpleADC from_graded_set(const GradedOrderedSet& g, Convention convention = Convention::standard);

/// Ordered sequence of n-dimensional elements whose consecutive members
/// enclose an element of lower dimension.
struct SeparatedSequence {
  int degree = 0;
  std::vector<Element> elements;

  friend auto operator<=>(const SeparatedSequence&, const SeparatedSequence&) = default;
};

/// Throws MixedDegrees when the elements do not share a dimension.
bool is_separated(const SimpleADC& k, std::span<const Element> seq);

/// Throws NotSeparated (or MixedDegrees) when `seq` is not separated.
SeparatedSequence make_separated(const SimpleADC& k, int degree, std::vector<Element> seq);

/// Combinatorial order: same length, termwise a'_i <= a''_i, and everything
/// strictly between a'_i and a''_i has dimension >= n.
bool separated_leq(const SimpleADC& k, const SeparatedSequence& lo, const SeparatedSequence& hi);

/// The same order via "a'' - a' is the boundary of a member of K_{n+1}^*",
/// searching members with coefficients <= coefficient_bound.
bool separated_leq_by_boundary(const SimpleADC& k, const SeparatedSequence& lo, const SeparatedSequence& hi,
                               int coefficient_bound = 1);

/// Interleaving test: b = (b_{1,1}, ..., b_{p,q(p)}) with
/// a_{i,j-1} < b_{i,j} < a_{i,j}. Throws NotComparable unless lo <= hi.
bool bridges(const SimpleADC& k, std::span<const Element> b, const SeparatedSequence& lo,
             const SeparatedSequence& hi);

/// Algebraic test: sum of b is a positive chain of degree n+1 whose boundary
/// is hi - lo (up to the convention's orientation). Throws NotComparable.
bool bridges_by_boundary(const SimpleADC& k, std::span<const Element> b, const SeparatedSequence& lo,
                         const SeparatedSequence& hi);

/// Every sequence bridging lo and hi, in lexicographic order. Empty when
/// lo is not <= hi.
std::vector<SeparatedSequence> bridging_sequences(const SimpleADC& k, const SeparatedSequence& lo,
                                                  const SeparatedSequence& hi);

/// An assignment of a sequence of basis elements of L to each basis element
/// of K, indexed by K's basis order.
using BasisAssignment = std::vector<std::vector<Element>>;

/// Checks the two extension conditions for simple complexes and builds the
/// morphism. Throws WrongDegree, NotSeparated, Condition1Violated or
/// Condition2Violated.
ChainMorphism validate_simple_morphism(const SimpleADC& k, const SimpleADC& l, const BasisAssignment& f);

/// Reads the assignment back off a morphism whose columns are 0/1.
BasisAssignment assignment_of(const ChainMorphism& f);

/// All morphisms K -> L, built degree by degree from bridging choices, sorted.
std::vector<ChainMorphism> enumerate_hom(const SimpleADC& k, const SimpleADC& l);

/// The column of b is a 0/1 vector whose support is a separated sequence.
bool image_is_separated(const SimpleADC& l, const ChainMorphism& f, BasisIndex b);

}  // namespace theta

#endif  // THETA_SIMPLE_COMPLEX_HPP
