#ifndef THETA_DUALITY_HPP
#define THETA_DUALITY_HPP

// Finite discs as coaugmented cochain complexes: the duals of simple
// augmented directed complexes, with morphisms the transposed chain maps.

#include <compare>
#include <memory>
#include <vector>

#include "theta/matrix.hpp"
#include "theta/morphism.hpp"
#include "theta/simple_complex.hpp"

namespace theta {

class CochainComplex {
 public:
  /// delta is the transpose of the boundary of k; eta(1) is the transpose of
  /// the augmentation.
  explicit CochainComplex(const SimpleADC& k);

  const DimensionSequence& dims() const noexcept { return dims_; }
  Convention convention() const noexcept { return convention_; }
  std::size_t size() const noexcept { return degrees_.size(); }
  int degree(BasisIndex c) const { return degrees_[c]; }
  int top_degree() const noexcept { return dims_.max_dimension(); }
  const std::vector<BasisIndex>& basis_of_degree(int q) const;
  std::size_t rank(int q) const { return basis_of_degree(q).size(); }
  std::size_t position_in_degree(BasisIndex c) const { return position_[c]; }

  /// Degree |c|+1 chain.
  const Chain& coboundary(BasisIndex c) const { return coboundary_[c]; }
  Chain coboundary_of(const Chain& x) const;
  /// eta(1), a degree-0 chain.
  const Chain& coaugmentation() const noexcept { return eta_; }

  friend bool operator==(const CochainComplex& a, const CochainComplex& b) {
    return a.degrees_ == b.degrees_ && a.coboundary_ == b.coboundary_ && a.eta_ == b.eta_;
  }

 private:
  DimensionSequence dims_;
  Convention convention_;
  std::vector<int> degrees_;
  std::vector<Chain> coboundary_;
  Chain eta_;
  std::vector<std::vector<BasisIndex>> by_degree_;
  std::vector<std::size_t> position_;
};

using CochainPtr = std::shared_ptr<const CochainComplex>;

CochainPtr dualize_object(const SimpleADC& k);

/// Transpose of delta back into boundary form, re-labelled as a complex on the
/// same basis. dualize_object followed by this is the identity.
ComplexPtr transpose_back(const CochainComplex& c);

/// delta c_q from the window description: delta^+ sums the (|c_q|+1)-elements
/// c_r, r < q, with every element from c_r up to c_q (exclusive) of higher
/// dimension; delta^- sums the c_s, s > q, with the same property on the other
/// side. Under the swapped convention the two sides exchange roles.
Chain window_coboundary(const DimensionSequence& dims, BasisIndex q, Convention convention);

/// Per-degree matrices; block q has target.rank(q) rows and source.rank(q)
/// columns.
class CochainMorphism {
 public:
  /// Throws ShapeMismatch.
  CochainMorphism(CochainPtr source, CochainPtr target, std::vector<Matrix> blocks);

  const CochainPtr& source() const noexcept { return source_; }
  const CochainPtr& target() const noexcept { return target_; }
  const std::vector<Matrix>& blocks() const noexcept { return blocks_; }
  Matrix block(int q) const;
  Chain image(BasisIndex c) const;
  Chain apply(const Chain& x) const;

  friend bool operator==(const CochainMorphism& a, const CochainMorphism& b) { return a.blocks_ == b.blocks_; }
  friend std::strong_ordering operator<=>(const CochainMorphism& a, const CochainMorphism& b) {
    return std::lexicographical_compare_three_way(a.blocks_.begin(), a.blocks_.end(), b.blocks_.begin(),
                                                  b.blocks_.end());
  }

 private:
  CochainPtr source_;
  CochainPtr target_;
  std::vector<Matrix> blocks_;
};

/// f: K -> L becomes f^T: dual L -> dual K. Contravariant:
/// dualize(g o f) = dualize(f) o dualize(g).
CochainMorphism dualize_morphism(const ChainMorphism& f, const CochainPtr& dual_source,
                                 const CochainPtr& dual_target);

/// The chain map a cochain morphism between duals of simple complexes comes
/// from. dualize_morphism followed by this is the identity.
ChainMorphism transpose_morphism(const CochainMorphism& g, const ComplexPtr& source, const ComplexPtr& target);

/// h after g. Throws SourceTargetMismatch.
CochainMorphism compose_cochain(const CochainMorphism& h, const CochainMorphism& g);

/// Throws ShapeMismatch, NegativeEntry, NotCoaugmented or NotCochainMap.
CochainMorphism validate_cochain_morphism(CochainPtr source, CochainPtr target, std::vector<Matrix> blocks);

/// Every coaugmentation-preserving cochain map with entries in
/// [0, entry_bound], found by column-wise exhaustive search from the top
/// degree down. Sorted.
std::vector<CochainMorphism> enumerate_cochain_hom(const CochainPtr& source, const CochainPtr& target,
                                                   int entry_bound = 1);

}  // namespace theta

#endif  // THETA_DUALITY_HPP
