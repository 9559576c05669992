#include "theta/chain.hpp"

namespace theta {

Chain::Chain(int degree, std::initializer_list<std::pair<const BasisIndex, Integer>> terms)
    : degree_(degree) {
  for (const auto& [b, c] : terms) add(b, c);
}

bool Chain::is_nonnegative() const {
  for (const auto& [b, c] : terms_)
    if (c < 0) return false;
  return true;
}

Integer Chain::coefficient(BasisIndex b) const {
  auto it = terms_.find(b);
  return it == terms_.end() ? Integer(0) : it->second;
}

Integer Chain::coefficient_sum() const {
  Integer sum = 0;
  for (const auto& [b, c] : terms_) sum += c;
  return sum;
}

void Chain::add(BasisIndex b, const Integer& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(b, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Chain& Chain::operator+=(const Chain& other) {
  for (const auto& [b, c] : other.terms_) add(b, c);
  return *this;
}

Chain& Chain::operator-=(const Chain& other) {
  for (const auto& [b, c] : other.terms_) add(b, -c);
  return *this;
}

Chain& Chain::operator*=(const Integer& scalar) {
  if (scalar == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [b, c] : terms_) c *= scalar;
  return *this;
}

Chain Chain::operator-() const {
  Chain out = *this;
  for (auto& [b, c] : out.terms_) c = -c;
  return out;
}

std::strong_ordering operator<=>(const Chain& a, const Chain& b) {
  if (auto cmp = a.degree_ <=> b.degree_; cmp != 0) return cmp;
  auto ia = a.terms_.begin();
  auto ib = b.terms_.begin();
  for (; ia != a.terms_.end() && ib != b.terms_.end(); ++ia, ++ib) {
    if (auto cmp = ia->first <=> ib->first; cmp != 0) return cmp;
    if (ia->second != ib->second)
      return ia->second < ib->second ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  if (ia == a.terms_.end() && ib == b.terms_.end()) return std::strong_ordering::equal;
  return ia == a.terms_.end() ? std::strong_ordering::less : std::strong_ordering::greater;
}

SignedParts pos_neg_parts(const Chain& x) {
  SignedParts parts{Chain(x.degree()), Chain(x.degree())};
  for (const auto& [b, c] : x.terms()) {
    if (c > 0)
      parts.positive.add(b, c);
    else
      parts.negative.add(b, -c);
  }
  return parts;
}

}  // namespace theta
