#ifndef THETA_MORPHISM_HPP
#define THETA_MORPHISM_HPP

#include <compare>
#include <vector>

#include "theta/complex.hpp"
#include "theta/matrix.hpp"

namespace theta {

/// Per-degree matrices of a homomorphism between complexes with bases.
/// Block q has target.rank(q) rows and source.rank(q) columns, both in basis
/// declaration order. Construction only checks shapes; instances produced by
/// validate_morphism_general(), the hom enumerators and compose_morphisms()
/// are genuine morphisms of augmented directed complexes.
class ChainMorphism {
 public:
  /// Throws ShapeMismatch.
  ChainMorphism(ComplexPtr source, ComplexPtr target, std::vector<Matrix> blocks);

  static ChainMorphism identity(const ComplexPtr& k);

  const ComplexPtr& source() const noexcept { return source_; }
  const ComplexPtr& target() const noexcept { return target_; }
  const std::vector<Matrix>& blocks() const noexcept { return blocks_; }
  /// Zero-column matrix for degrees the source does not have.
  Matrix block(int q) const;

  Chain image(BasisIndex b) const;
  Chain apply(const Chain& x) const;

  friend bool operator==(const ChainMorphism& a, const ChainMorphism& b) { return a.blocks_ == b.blocks_; }
  friend std::strong_ordering operator<=>(const ChainMorphism& a, const ChainMorphism& b);

 private:
  ComplexPtr source_;
  ComplexPtr target_;
  std::vector<Matrix> blocks_;
};

/// Checks nonnegativity, augmentation preservation and the chain-map law.
/// Throws ShapeMismatch, NegativeEntry, NotAugmented or NotChainMap.
ChainMorphism validate_morphism_general(ComplexPtr source, ComplexPtr target, std::vector<Matrix> blocks);

/// g after f. Throws SourceTargetMismatch.
ChainMorphism compose_morphisms(const ChainMorphism& g, const ChainMorphism& f);

bool same_complex(const ComplexPtr& a, const ComplexPtr& b);

}  // namespace theta

#endif  // THETA_MORPHISM_HPP
