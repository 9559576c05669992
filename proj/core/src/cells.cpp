#include "theta/cells.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "theta/errors.hpp"

namespace theta {

namespace {

void trim(std::vector<Cell::Level>& levels) {
  while (levels.size() > 1 && levels.back().minus.is_zero() && levels.back().plus.is_zero()) levels.pop_back();
}

}  // namespace

Cell::Cell(ComplexPtr complex, std::vector<Level> levels) : complex_(std::move(complex)), levels_(std::move(levels)) {
  trim(levels_);
}

Cell unchecked_cell(ComplexPtr k, std::vector<Cell::Level> levels) { return Cell(std::move(k), std::move(levels)); }

Cell::Level Cell::level(int q) const {
  if (q >= 0 && q < static_cast<int>(levels_.size())) return levels_[static_cast<std::size_t>(q)];
  return Level{Chain(q), Chain(q)};
}

Cell make_cell(ComplexPtr k, std::vector<Cell::Level> levels) {
  if (levels.empty()) throw Error(ErrorCode::BadAugmentation, "a cell needs a degree-0 level");
  for (std::size_t q = 0; q < levels.size(); ++q) {
    const int deg = static_cast<int>(q);
    for (Chain* c : {&levels[q].minus, &levels[q].plus}) {
      if (c->is_zero()) *c = Chain(deg);
      if (c->degree() != deg) throw Error(ErrorCode::WrongDegree, "level " + std::to_string(q) + " chain has degree " + std::to_string(c->degree()));
      for (const auto& [b, coeff] : c->terms()) {
        if (b >= k->size() || k->degree(b) != deg)
          throw Error(ErrorCode::WrongDegree, "basis element " + std::to_string(b) + " is not of degree " + std::to_string(deg));
      }
      if (!c->is_nonnegative()) throw Error(ErrorCode::NegativeEntry, "level " + std::to_string(q) + " is not positive");
    }
  }
  if (k->augment(levels[0].minus) != 1 || k->augment(levels[0].plus) != 1)
    throw Error(ErrorCode::BadAugmentation, "degree-0 components must have augmentation 1");
  for (std::size_t q = 0; q + 1 < levels.size(); ++q) {
    const Chain diff = levels[q].plus - levels[q].minus;
    if (k->boundary_of(levels[q + 1].minus) != diff || k->boundary_of(levels[q + 1].plus) != diff)
      throw Error(ErrorCode::BoundaryMismatch, "x_" + std::to_string(q) + "^+ - x_" + std::to_string(q) +
                                                   "^- is not the boundary of level " + std::to_string(q + 1));
  }
  if (levels.back().minus != levels.back().plus)
    throw Error(ErrorCode::InfiniteSupport, "the last supplied level has x^- != x^+, so higher levels cannot vanish");
  return Cell(std::move(k), std::move(levels));
}

Cell identity_at(int n, Sign sign, const Cell& x) {
  std::vector<Cell::Level> levels;
  for (int q = 0; q < n && q <= x.dimension(); ++q) levels.push_back(x.level(q));
  if (n <= x.dimension()) {
    const Cell::Level top = x.level(n);
    const Chain& pick = sign == Sign::minus ? top.minus : top.plus;
    levels.push_back(Cell::Level{pick, pick});
  }
  return unchecked_cell(x.complex(), std::move(levels));
}

Cell compose(int n, const Cell& x, const Cell& y) {
  if (!same_complex(x.complex(), y.complex()))
    throw Error(ErrorCode::NotComposable, "cells live in different complexes");
  const Cell z = identity_at(n, Sign::plus, x);
  if (z != identity_at(n, Sign::minus, y))
    throw Error(ErrorCode::NotComposable, "d_" + std::to_string(n) + "^+ x != d_" + std::to_string(n) + "^- y");
  const int top = std::max(x.dimension(), y.dimension());
  std::vector<Cell::Level> levels;
  for (int q = 0; q <= top; ++q) {
    const Cell::Level a = x.level(q), b = z.level(q), c = y.level(q);
    levels.push_back(Cell::Level{a.minus - b.minus + c.minus, a.plus - b.plus + c.plus});
  }
  return unchecked_cell(x.complex(), std::move(levels));
}

Cell atom(const ComplexPtr& k, BasisIndex b) {
  if (!check_unital(*k)) throw Error(ErrorCode::NotUnital, "atoms need a unital basis");
  const int n = k->degree(b);
  const Chain x = Chain::basis(n, b);
  std::vector<Cell::Level> levels;
  for (int q = 0; q < n; ++q)
    levels.push_back(Cell::Level{k->iterated_part(x, Sign::minus, n - q), k->iterated_part(x, Sign::plus, n - q)});
  levels.push_back(Cell::Level{x, x});
  return unchecked_cell(k, std::move(levels));
}

bool check_atom_boundary(const SimpleADC& k, BasisIndex b) {
  const auto& kc = k.complex();
  const int n = kc->degree(b);
  if (n == 0) throw Error(ErrorCode::ZeroDimensional, "points have no boundary atoms");
  const SignedParts parts = pos_neg_parts(kc->boundary(b));
  const Cell whole = atom(kc, b);
  for (Sign s : {Sign::minus, Sign::plus}) {
    const Chain& face = s == Sign::minus ? parts.negative : parts.positive;
    if (face.terms().size() != 1 || face.terms().begin()->second != 1) return false;
    if (identity_at(n - 1, s, whole) != atom(kc, face.terms().begin()->first)) return false;
  }
  return true;
}

namespace {

// All positive chains of degree q with coefficients in [0, cap].
std::vector<Chain> bounded_chains(const AugmentedDirectedComplex& k, int q, int cap) {
  const auto& basis = k.basis_of_degree(q);
  std::vector<Chain> out;
  std::vector<int> coeffs(basis.size(), 0);
  while (true) {
    Chain c(q);
    for (std::size_t i = 0; i < basis.size(); ++i) c.add(basis[i], coeffs[i]);
    out.push_back(std::move(c));
    std::size_t i = 0;
    while (i < coeffs.size() && coeffs[i] == cap) coeffs[i++] = 0;
    if (i == coeffs.size()) break;
    ++coeffs[i];
  }
  return out;
}

class CellEnumerator {
 public:
  CellEnumerator(ComplexPtr k, int cap) : k_(std::move(k)) {
    const auto& kc = *k_;
    for (const Chain& c : bounded_chains(kc, 0, cap))
      if (kc.augment(c) == 1) points_.push_back(c);
    for (int q = 1; q <= kc.top_degree(); ++q) {
      std::map<Chain, std::vector<Chain>> by_boundary;
      for (Chain& c : bounded_chains(kc, q, cap)) by_boundary[kc.boundary_of(c)].push_back(std::move(c));
      fillers_.push_back(std::move(by_boundary));
    }
  }

  std::vector<Cell> run() {
    for (const Chain& m : points_)
      for (const Chain& p : points_) {
        levels_.push_back(Cell::Level{m, p});
        extend();
        levels_.pop_back();
      }
    std::sort(cells_.begin(), cells_.end());
    cells_.erase(std::unique(cells_.begin(), cells_.end()), cells_.end());
    return std::move(cells_);
  }

 private:
  void extend() {
    const Cell::Level& last = levels_.back();
    const Chain diff = last.plus - last.minus;
    const std::size_t q = levels_.size();  // degree of the next level
    if (q > fillers_.size()) {
      if (diff.is_zero()) cells_.push_back(unchecked_cell(k_, levels_));
      return;
    }
    const auto it = fillers_[q - 1].find(diff);
    if (it == fillers_[q - 1].end()) return;
    for (const Chain& m : it->second)
      for (const Chain& p : it->second) {
        levels_.push_back(Cell::Level{m, p});
        extend();
        levels_.pop_back();
      }
  }

  ComplexPtr k_;
  std::vector<Chain> points_;
  std::vector<std::map<Chain, std::vector<Chain>>> fillers_;  // index q-1 for degree q
  std::vector<Cell::Level> levels_;
  std::vector<Cell> cells_;
};

}  // namespace

std::vector<Cell> enumerate_cells(const ComplexPtr& k, int cap) {
  if (k->empty()) return {};
  return CellEnumerator(k, cap).run();
}

Cell nu_map(const ChainMorphism& f, const Cell& x) {
  std::vector<Cell::Level> levels;
  for (const Cell::Level& l : x.levels()) levels.push_back(Cell::Level{f.apply(l.minus), f.apply(l.plus)});
  return unchecked_cell(f.target(), std::move(levels));
}

}  // namespace theta
