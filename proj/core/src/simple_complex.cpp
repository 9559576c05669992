#include "theta/simple_complex.hpp"

#include <algorithm>
#include <string>

#include "theta/errors.hpp"

namespace theta {

namespace {

ComplexPtr build_simple_complex(const DimensionSequence& dims, Convention convention) {
  const GradedOrderedSet g(dims);
  ComplexData data;
  data.degrees = dims.dims();
  data.boundaries.reserve(dims.size());
  data.augmentation.assign(dims.size(), 0);
  for (Element x = 0; x < dims.size(); ++x) {
    const int n = dims[x];
    if (n == 0) {
      data.boundaries.emplace_back(-1);
      data.augmentation[x] = 1;
      continue;
    }
    const Boundaries bd = boundaries(g, x);
    const int sign = orientation(convention);
    data.boundaries.push_back(Chain(n - 1, {{bd.target, sign}, {bd.source, -sign}}));
  }
  return make_complex(std::move(data));
}

}  // namespace

SimpleADC::SimpleADC(DimensionSequence dims, Convention convention)
    : dims_(std::move(dims)), convention_(convention), complex_(build_simple_complex(dims_, convention)) {}

SimpleADC::SimpleADC(DimensionSequence dims, Convention convention, ComplexPtr complex)
    : dims_(std::move(dims)), convention_(convention), complex_(std::move(complex)) {}

std::optional<SimpleADC> SimpleADC::recognize(ComplexPtr k, Convention convention) {
  if (!k || k->empty()) return std::nullopt;
  std::optional<DimensionSequence> dims;
  try {
    dims.emplace(k->data().degrees);
  } catch (const Error&) {
    return std::nullopt;
  }
  SimpleADC candidate(*dims, convention);
  if (!(*candidate.complex() == *k)) return std::nullopt;
  return SimpleADC(std::move(*dims), convention, std::move(k));
}

bool SimpleADC::encloses_lower(Element a, Element b, int n) const {
  for (Element c = a + 1; c < b; ++c)
    if (dims_[c] < n) return true;
  return false;
}

SimpleADC from_graded_set(const GradedOrderedSet& g, Convention convention) {
  return SimpleADC(g.dimensions(), convention);
}

bool is_separated(const SimpleADC& k, std::span<const Element> seq) {
  if (seq.empty()) return true;
  const int n = k.dimension(seq.front());
  for (Element e : seq)
    if (k.dimension(e) != n) throw Error(ErrorCode::MixedDegrees, "sequence mixes dimensions");
  for (std::size_t i = 1; i < seq.size(); ++i) {
    if (seq[i - 1] >= seq[i]) return false;
    if (!k.encloses_lower(seq[i - 1], seq[i], n)) return false;
  }
  return true;
}

SeparatedSequence make_separated(const SimpleADC& k, int degree, std::vector<Element> seq) {
  for (Element e : seq) {
    if (e >= k.size() || k.dimension(e) != degree)
      throw Error(ErrorCode::MixedDegrees, "element " + std::to_string(e) + " is not of dimension " +
                                               std::to_string(degree));
  }
  if (!is_separated(k, seq)) throw Error(ErrorCode::NotSeparated, "sequence is not separated");
  return SeparatedSequence{degree, std::move(seq)};
}

bool separated_leq(const SimpleADC& k, const SeparatedSequence& lo, const SeparatedSequence& hi) {
  if (lo.degree != hi.degree || lo.elements.size() != hi.elements.size()) return false;
  for (std::size_t i = 0; i < lo.elements.size(); ++i) {
    if (lo.elements[i] > hi.elements[i]) return false;
    if (k.encloses_lower(lo.elements[i], hi.elements[i], lo.degree)) return false;
  }
  return true;
}

namespace {

Chain sum_of(int degree, std::span<const Element> elements) {
  Chain c(degree);
  for (Element e : elements) c.add(e, 1);
  return c;
}

Chain oriented_difference(const SimpleADC& k, const SeparatedSequence& lo, const SeparatedSequence& hi) {
  Chain diff = sum_of(hi.degree, hi.elements) - sum_of(lo.degree, lo.elements);
  diff *= orientation(k.convention());
  return diff;
}

void require_comparable(const SimpleADC& k, const SeparatedSequence& lo, const SeparatedSequence& hi) {
  if (!separated_leq(k, lo, hi)) throw Error(ErrorCode::NotComparable, "a' is not <= a''");
}

// The n-dimensional elements a with from <= a <= to, in order.
std::vector<Element> elements_in_range(const SimpleADC& k, Element from, Element to, int n) {
  std::vector<Element> out;
  for (Element e = from; e <= to; ++e)
    if (k.dimension(e) == n) out.push_back(e);
  return out;
}

}  // namespace

bool separated_leq_by_boundary(const SimpleADC& k, const SeparatedSequence& lo, const SeparatedSequence& hi,
                               int coefficient_bound) {
  if (lo.degree != hi.degree) return false;
  const Chain wanted = oriented_difference(k, lo, hi);
  const auto& upper = k.complex()->basis_of_degree(lo.degree + 1);
  std::vector<int> coeffs(upper.size(), 0);
  while (true) {
    Chain c(lo.degree + 1);
    for (std::size_t i = 0; i < upper.size(); ++i) c.add(upper[i], coeffs[i]);
    if (k.complex()->boundary_of(c) == wanted) return true;
    std::size_t i = 0;
    while (i < coeffs.size() && coeffs[i] == coefficient_bound) coeffs[i++] = 0;
    if (i == coeffs.size()) return false;
    ++coeffs[i];
  }
}

bool bridges(const SimpleADC& k, std::span<const Element> b, const SeparatedSequence& lo,
             const SeparatedSequence& hi) {
  require_comparable(k, lo, hi);
  const int n = lo.degree;
  std::size_t pos = 0;
  for (std::size_t i = 0; i < lo.elements.size(); ++i) {
    const auto chain = elements_in_range(k, lo.elements[i], hi.elements[i], n);
    for (std::size_t j = 1; j < chain.size(); ++j) {
      if (pos >= b.size()) return false;
      const Element e = b[pos++];
      if (e >= k.size() || k.dimension(e) != n + 1) return false;
      if (!(chain[j - 1] < e && e < chain[j])) return false;
    }
  }
  return pos == b.size();
}

bool bridges_by_boundary(const SimpleADC& k, std::span<const Element> b, const SeparatedSequence& lo,
                         const SeparatedSequence& hi) {
  require_comparable(k, lo, hi);
  for (Element e : b)
    if (e >= k.size() || k.dimension(e) != lo.degree + 1) return false;
  const Chain c = sum_of(lo.degree + 1, b);
  return k.complex()->boundary_of(c) == oriented_difference(k, lo, hi);
}

std::vector<SeparatedSequence> bridging_sequences(const SimpleADC& k, const SeparatedSequence& lo,
                                                  const SeparatedSequence& hi) {
  if (!separated_leq(k, lo, hi)) return {};
  const int n = lo.degree;
  // One slot per gap a_{i,j-1} < a_{i,j}; each slot lists its candidates.
  std::vector<std::vector<Element>> slots;
  for (std::size_t i = 0; i < lo.elements.size(); ++i) {
    const auto chain = elements_in_range(k, lo.elements[i], hi.elements[i], n);
    for (std::size_t j = 1; j < chain.size(); ++j) {
      std::vector<Element> candidates;
      for (Element e = chain[j - 1] + 1; e < chain[j]; ++e)
        if (k.dimension(e) == n + 1) candidates.push_back(e);
      if (candidates.empty()) return {};
      slots.push_back(std::move(candidates));
    }
  }
  std::vector<SeparatedSequence> out;
  std::vector<std::size_t> choice(slots.size(), 0);
  while (true) {
    SeparatedSequence s{n + 1, {}};
    for (std::size_t i = 0; i < slots.size(); ++i) s.elements.push_back(slots[i][choice[i]]);
    out.push_back(std::move(s));
    std::size_t i = slots.size();
    while (i > 0 && choice[i - 1] + 1 == slots[i - 1].size()) choice[--i] = 0;
    if (i == 0) break;
    ++choice[i - 1];
  }
  return out;
}

bool image_is_separated(const SimpleADC& l, const ChainMorphism& f, BasisIndex b) {
  const Chain img = f.image(b);
  std::vector<Element> support;
  for (const auto& [e, c] : img.terms()) {
    if (c != 1) return false;
    support.push_back(e);
  }
  for (Element e : support)
    if (l.dimension(e) != img.degree()) return false;
  return is_separated(l, support);
}

BasisAssignment assignment_of(const ChainMorphism& f) {
  BasisAssignment out(f.source()->size());
  for (BasisIndex b = 0; b < out.size(); ++b) {
    const Chain img = f.image(b);
    for (const auto& [e, c] : img.terms())
      for (Integer i = 0; i < c; ++i) out[b].push_back(e);
  }
  return out;
}

}  // namespace theta
