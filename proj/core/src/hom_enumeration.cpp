#include <algorithm>
#include <string>

#include "theta/errors.hpp"
#include "theta/simple_complex.hpp"

namespace theta {

namespace {

ChainMorphism build_morphism(const SimpleADC& k, const SimpleADC& l, const BasisAssignment& f) {
  const auto& kc = *k.complex();
  const auto& lc = *l.complex();
  std::vector<Matrix> blocks;
  for (int q = 0; q <= kc.top_degree(); ++q) blocks.emplace_back(lc.rank(q), kc.rank(q));
  for (BasisIndex b = 0; b < f.size(); ++b) {
    Matrix& m = blocks[static_cast<std::size_t>(kc.degree(b))];
    for (Element e : f[b]) m.at(lc.position_in_degree(e), kc.position_in_degree(b)) += 1;
  }
  return ChainMorphism(k.complex(), l.complex(), std::move(blocks));
}

// A pair a' < a'' of (n-1)-dimensional elements with only elements of
// dimension >= n between them, together with the n-dimensional elements
// lying between.
struct Gap {
  int degree;  // n
  Element lower;
  Element upper;
  std::vector<Element> inner;
};

std::vector<Gap> gaps_of(const SimpleADC& k) {
  std::vector<Gap> out;
  const int top = k.dims().max_dimension();
  for (int n = 1; n <= top; ++n) {
    std::vector<Element> faces;
    for (Element e = 0; e < k.size(); ++e)
      if (k.dimension(e) == n - 1) faces.push_back(e);
    for (std::size_t t = 1; t < faces.size(); ++t) {
      if (k.encloses_lower(faces[t - 1], faces[t], n)) continue;
      Gap g{n, faces[t - 1], faces[t], {}};
      for (Element e = faces[t - 1] + 1; e < faces[t]; ++e)
        if (k.dimension(e) == n) g.inner.push_back(e);
      if (!g.inner.empty()) out.push_back(std::move(g));
    }
  }
  return out;
}

std::vector<Element> zero_dimensional(const SimpleADC& k) {
  std::vector<Element> out;
  for (Element e = 0; e < k.size(); ++e)
    if (k.dimension(e) == 0) out.push_back(e);
  return out;
}

}  // namespace

ChainMorphism validate_simple_morphism(const SimpleADC& k, const SimpleADC& l, const BasisAssignment& f) {
  if (f.size() != k.size())
    throw Error(ErrorCode::ShapeMismatch, "assignment has " + std::to_string(f.size()) + " entries, expected " +
                                              std::to_string(k.size()));
  for (Element b = 0; b < k.size(); ++b) {
    for (Element e : f[b]) {
      if (e >= l.size() || l.dimension(e) != k.dimension(b))
        throw Error(ErrorCode::WrongDegree, "image of element " + std::to_string(b) + " has the wrong dimension");
    }
    if (!is_separated(l, f[b]))
      throw Error(ErrorCode::NotSeparated, "image of element " + std::to_string(b) + " is not separated");
  }

  const auto points = zero_dimensional(k);
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (f[points[i]].size() != 1)
      throw Error(ErrorCode::Condition1Violated, "image of point " + std::to_string(points[i]) + " is not a singleton");
    if (i > 0 && f[points[i - 1]][0] > f[points[i]][0])
      throw Error(ErrorCode::Condition1Violated, "images of points are not increasing");
  }

  for (const Gap& g : gaps_of(k)) {
    const SeparatedSequence lo{g.degree - 1, f[g.lower]};
    const SeparatedSequence hi{g.degree - 1, f[g.upper]};
    if (!separated_leq(l, lo, hi))
      throw Error(ErrorCode::Condition2Violated,
                  "images of " + std::to_string(g.lower) + " and " + std::to_string(g.upper) + " are not comparable");
    for (std::size_t i = 0; i < g.inner.size(); ++i) {
      const Element a = g.inner[i];
      if (!bridges(l, f[a], lo, hi))
        throw Error(ErrorCode::Condition2Violated, "image of " + std::to_string(a) + " does not bridge");
      if (i > 0) {
        const SeparatedSequence prev{g.degree, f[g.inner[i - 1]]};
        const SeparatedSequence cur{g.degree, f[a]};
        if (!separated_leq(l, prev, cur))
          throw Error(ErrorCode::Condition2Violated, "images between " + std::to_string(g.lower) + " and " +
                                                         std::to_string(g.upper) + " are not increasing");
      }
    }
  }
  return build_morphism(k, l, f);
}

namespace {

class HomEnumerator {
 public:
  HomEnumerator(const SimpleADC& k, const SimpleADC& l)
      : k_(k), l_(l), points_(zero_dimensional(k)), gaps_(gaps_of(k)), target_points_(zero_dimensional(l)) {}

  std::vector<ChainMorphism> run() {
    assignment_.assign(k_.size(), {});
    place_points(0, 0);
    std::sort(out_.begin(), out_.end());
    return std::move(out_);
  }

 private:
  // Condition (i): points go to a weakly increasing run of target points.
  void place_points(std::size_t i, std::size_t min_target) {
    if (i == points_.size()) {
      fill_gap(0);
      return;
    }
    for (std::size_t t = min_target; t < target_points_.size(); ++t) {
      assignment_[points_[i]] = {target_points_[t]};
      place_points(i + 1, t);
    }
  }

  // Condition (ii): gaps are ordered by degree, so both faces of a gap are
  // already assigned when it is reached.
  void fill_gap(std::size_t gi) {
    if (gi == gaps_.size()) {
      out_.push_back(build_morphism(k_, l_, assignment_));
      return;
    }
    const Gap& g = gaps_[gi];
    const SeparatedSequence lo{g.degree - 1, assignment_[g.lower]};
    const SeparatedSequence hi{g.degree - 1, assignment_[g.upper]};
    const auto options = bridging_sequences(l_, lo, hi);
    if (options.empty()) return;
    std::vector<std::vector<bool>> leq(options.size(), std::vector<bool>(options.size()));
    for (std::size_t a = 0; a < options.size(); ++a)
      for (std::size_t b = 0; b < options.size(); ++b) leq[a][b] = separated_leq(l_, options[a], options[b]);
    choose_chain(gi, options, leq, 0, options.size());
  }

  void choose_chain(std::size_t gi, const std::vector<SeparatedSequence>& options,
                    const std::vector<std::vector<bool>>& leq, std::size_t i, std::size_t previous) {
    const Gap& g = gaps_[gi];
    if (i == g.inner.size()) {
      fill_gap(gi + 1);
      return;
    }
    for (std::size_t c = 0; c < options.size(); ++c) {
      if (previous != options.size() && !leq[previous][c]) continue;
      assignment_[g.inner[i]] = options[c].elements;
      choose_chain(gi, options, leq, i + 1, c);
    }
    assignment_[g.inner[i]].clear();
  }

  const SimpleADC& k_;
  const SimpleADC& l_;
  std::vector<Element> points_;
  std::vector<Gap> gaps_;
  std::vector<Element> target_points_;
  BasisAssignment assignment_;
  std::vector<ChainMorphism> out_;
};

}  // namespace

std::vector<ChainMorphism> enumerate_hom(const SimpleADC& k, const SimpleADC& l) {
  return HomEnumerator(k, l).run();
}

}  // namespace theta
