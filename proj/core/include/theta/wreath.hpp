#ifndef THETA_WREATH_HPP
#define THETA_WREATH_HPP

// The wreath product of the simplex category with a category of augmented
// directed complexes, and the functor V into complexes that joins suspended
// components between points p^0, ..., p^m.

#include <cstddef>
#include <functional>
#include <vector>

#include "theta/complex.hpp"
#include "theta/morphism.hpp"
#include "theta/simple_complex.hpp"

namespace theta {

/// (m, (K^1, ..., K^m)); m = 0 is the empty tuple.
class WreathObject {
 public:
  WreathObject() = default;
  explicit WreathObject(std::vector<ComplexPtr> components) : components_(std::move(components)) {}
  /// Throws InvalidWreathMorphism when the tuple length is not m.
  WreathObject(std::size_t m, std::vector<ComplexPtr> components);

  std::size_t length() const noexcept { return components_.size(); }
  /// 1-based, as in K^i.
  const ComplexPtr& component(std::size_t i) const { return components_[i - 1]; }
  const std::vector<ComplexPtr>& components() const noexcept { return components_; }

  friend bool operator==(const WreathObject& a, const WreathObject& b);

 private:
  std::vector<ComplexPtr> components_;
};

WreathObject wreath_of_simple(const std::vector<SimpleADC>& components);

/// (phi, f): phi(0) <= ... <= phi(m) <= n and f_i^j: K^i -> L^j for
/// phi(i-1) < j <= phi(i), listed in that order.
class WreathMorphism {
 public:
  /// Throws InvalidWreathMorphism.
  WreathMorphism(WreathObject source, WreathObject target, std::vector<std::size_t> phi,
                 std::vector<ChainMorphism> family);

  static WreathMorphism identity(const WreathObject& w);

  const WreathObject& source() const noexcept { return source_; }
  const WreathObject& target() const noexcept { return target_; }
  const std::vector<std::size_t>& phi() const noexcept { return phi_; }
  const std::vector<ChainMorphism>& family() const noexcept { return family_; }
  /// f_i^j, for phi(i-1) < j <= phi(i).
  const ChainMorphism& component(std::size_t i, std::size_t j) const;

  friend bool operator==(const WreathMorphism& a, const WreathMorphism& b) {
    return a.phi_ == b.phi_ && a.family_ == b.family_;
  }

 private:
  WreathObject source_;
  WreathObject target_;
  std::vector<std::size_t> phi_;
  std::vector<ChainMorphism> family_;
  std::vector<std::size_t> offset_;  // offset_[i] = index of f_i^{phi(i-1)+1}
};

/// (psi, g) o (phi, f). Throws SourceTargetMismatch.
WreathMorphism wreath_compose(const WreathMorphism& second, const WreathMorphism& first);

/// Index of p^i and of s b (b a basis element of K^i) inside V(m, K).
struct SuspensionLayout {
  std::vector<BasisIndex> point;                   // point[i] = p^i
  std::vector<std::vector<BasisIndex>> suspended;  // suspended[i-1][b] = s b, b in K^i
};

SuspensionLayout layout_of(const WreathObject& w);

/// Z p^0 + s K^1 + Z p^1 + ... + s K^m + Z p^m, basis in that order.
/// |s x| = |x| + 1, d s x = s d x for |x| > 0, d s x = (eps x)(p^i - p^{i-1})
/// for |x| = 0 (negated under the swapped convention), d p^i = 0, eps p^i = 1.
ComplexPtr v_object(const WreathObject& w, Convention convention = Convention::standard);

/// p^i -> p^{phi(i)}, s x -> sum over phi(i-1) < j <= phi(i) of s f_i^j x.
ChainMorphism v_morphism(const WreathMorphism& wm, const ComplexPtr& v_source, const ComplexPtr& v_target);
ChainMorphism v_morphism(const WreathMorphism& wm, Convention convention = Convention::standard);

using HomFunction = std::function<std::vector<ChainMorphism>(const ComplexPtr&, const ComplexPtr&)>;

/// Hom-sets between complexes that are simple under `convention`; throws
/// NotSimple otherwise.
HomFunction simple_hom_function(Convention convention);

/// Every (phi, f), with phi in lexicographic order and f ranging over the
/// product of component hom-sets in homFn order.
std::vector<WreathMorphism> enumerate_wreath_hom(const WreathObject& source, const WreathObject& target,
                                                 const HomFunction& hom);

struct FullFaithfulness {
  std::size_t wreath_count = 0;  // |Hom(w1, w2)| in the wreath product
  std::size_t target_count = 0;  // |Hom(V w1, V w2)|
  bool injective = false;
  bool image_is_target = false;

  bool holds() const noexcept {
    return injective && image_is_target && wreath_count == target_count;
  }
};

/// Compares Hom(w1, w2) with Hom(V w1, V w2) through V. Every component must
/// be nonzero with a loop-free unital basis; throws ComponentOutsidePhi.
FullFaithfulness check_fully_faithful(const WreathObject& w1, const WreathObject& w2, const HomFunction& hom,
                                      Convention convention = Convention::standard);
FullFaithfulness check_fully_faithful(const WreathObject& w1, const WreathObject& w2,
                                      Convention convention = Convention::standard);

/// Largest dimension in the sequence; K lies in Theta_n iff this is <= n.
int theta_level(const SimpleADC& k);

/// Objects of Theta_n with at most `max_size` basis elements, generated by V
/// from tuples of Theta_{n-1} objects starting at Theta_0 = {(0)}. Sorted by
/// dimension sequence (length first).
std::vector<SimpleADC> iterated_wreath_objects(int depth, std::size_t max_size,
                                               Convention convention = Convention::standard);

}  // namespace theta

#endif  // THETA_WREATH_HPP
