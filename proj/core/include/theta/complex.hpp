#ifndef THETA_COMPLEX_HPP
#define THETA_COMPLEX_HPP

#include <cstddef>
#include <memory>
#include <vector>

#include "theta/chain.hpp"

namespace theta {

enum class Sign { minus, plus };

constexpr Sign opposite(Sign s) noexcept { return s == Sign::minus ? Sign::plus : Sign::minus; }

/// Raw description of an augmented directed complex with a prescribed basis.
/// The basis is the list of indices 0..n-1 in declaration order; the
/// distinguished submonoids are the nonnegative combinations of it.
struct ComplexData {
  std::vector<int> degrees;
  /// boundaries[i] has degree degrees[i] - 1; it is zero for degree 0.
  std::vector<Chain> boundaries;
  /// Only read for degree-0 elements; must be zero elsewhere.
  std::vector<Integer> augmentation;

  friend bool operator==(const ComplexData&, const ComplexData&) = default;
};

/// Throws MalformedComplex (bad shapes or degrees), NotChainComplex
/// (boundary of a boundary is nonzero) or NotAugmentedComplex (augmentation
/// of a degree-1 boundary is nonzero).
void validate_structure(const ComplexData& data);

class AugmentedDirectedComplex {
 public:
  /// Validates with validate_structure().
  explicit AugmentedDirectedComplex(ComplexData data);

  std::size_t size() const noexcept { return data_.degrees.size(); }
  bool empty() const noexcept { return data_.degrees.empty(); }
  int degree(BasisIndex b) const { return data_.degrees[b]; }
  /// -1 for the zero complex.
  int top_degree() const noexcept { return static_cast<int>(by_degree_.size()) - 1; }

  const Chain& boundary(BasisIndex b) const { return data_.boundaries[b]; }
  const Integer& augmentation(BasisIndex b) const { return data_.augmentation[b]; }

  /// Basis elements of degree q in declaration order.
  const std::vector<BasisIndex>& basis_of_degree(int q) const;
  std::size_t rank(int q) const { return basis_of_degree(q).size(); }
  /// Index of b inside basis_of_degree(degree(b)).
  std::size_t position_in_degree(BasisIndex b) const { return position_[b]; }

  Chain boundary_of(const Chain& x) const;
  Integer augment(const Chain& x) const;
  /// (d^sign)^times x, where d^- and d^+ are the negative and positive parts
  /// of the boundary.
  Chain iterated_part(const Chain& x, Sign sign, int times) const;

  const ComplexData& data() const noexcept { return data_; }

  friend bool operator==(const AugmentedDirectedComplex& a, const AugmentedDirectedComplex& b) {
    return a.data_ == b.data_;
  }

 private:
  ComplexData data_;
  std::vector<std::vector<BasisIndex>> by_degree_;
  std::vector<std::size_t> position_;
};

using ComplexPtr = std::shared_ptr<const AugmentedDirectedComplex>;

ComplexPtr make_complex(ComplexData data);

/// The same basis with every boundary negated.
ComplexPtr negated(const AugmentedDirectedComplex& k);

bool check_unital(const AugmentedDirectedComplex& k);
bool check_strongly_loop_free(const AugmentedDirectedComplex& k);
bool check_loop_free(const AugmentedDirectedComplex& k);

}  // namespace theta

#endif  // THETA_COMPLEX_HPP
