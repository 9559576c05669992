#ifndef THETA_CHAIN_HPP
#define THETA_CHAIN_HPP

#include <compare>
#include <cstddef>
#include <map>
#include <utility>

#include <boost/multiprecision/cpp_int.hpp>

namespace theta {

using Integer = boost::multiprecision::cpp_int;
using BasisIndex = std::size_t;

/// A finitely supported integer combination of basis elements of one degree.
/// Zero coefficients are never stored, so equality is structural.
class Chain {
 public:
  using Terms = std::map<BasisIndex, Integer>;

  explicit Chain(int degree = 0) : degree_(degree) {}
  Chain(int degree, std::initializer_list<std::pair<const BasisIndex, Integer>> terms);

  static Chain basis(int degree, BasisIndex b) { return Chain(degree, {{b, 1}}); }

  int degree() const noexcept { return degree_; }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_nonnegative() const;
  Integer coefficient(BasisIndex b) const;
  Integer coefficient_sum() const;

  void add(BasisIndex b, const Integer& c);

  Chain& operator+=(const Chain& other);
  Chain& operator-=(const Chain& other);
  Chain& operator*=(const Integer& scalar);
  friend Chain operator+(Chain a, const Chain& b) { return a += b; }
  friend Chain operator-(Chain a, const Chain& b) { return a -= b; }
  friend Chain operator*(const Integer& s, Chain a) { return a *= s; }
  Chain operator-() const;

  friend bool operator==(const Chain& a, const Chain& b) {
    return a.degree_ == b.degree_ && a.terms_ == b.terms_;
  }
  friend std::strong_ordering operator<=>(const Chain& a, const Chain& b);

 private:
  int degree_;
  Terms terms_;
};

/// x = positive - negative with disjoint supports.
struct SignedParts {
  Chain positive;
  Chain negative;
};

SignedParts pos_neg_parts(const Chain& x);

}  // namespace theta

#endif  // THETA_CHAIN_HPP
