#ifndef THETA_CELLS_HPP
#define THETA_CELLS_HPP

#include <compare>
#include <vector>

#include "theta/complex.hpp"
#include "theta/morphism.hpp"
#include "theta/simple_complex.hpp"

namespace theta {

/// A member of the omega-category nu K: a finitely supported double sequence
/// (x_0^-, x_0^+ | x_1^-, x_1^+ | ...) of positive chains with
/// eps x_0^- = eps x_0^+ = 1 and x_q^+ - x_q^- = d x_{q+1}^- = d x_{q+1}^+.
///
/// Levels are stored up to the last nonzero one, so equality is exact.
class Cell {
 public:
  struct Level {
    Chain minus;
    Chain plus;

    friend bool operator==(const Level&, const Level&) = default;
    friend std::strong_ordering operator<=>(const Level& a, const Level& b) {
      if (auto cmp = a.minus <=> b.minus; cmp != 0) return cmp;
      return a.plus <=> b.plus;
    }
  };

  const ComplexPtr& complex() const noexcept { return complex_; }
  const std::vector<Level>& levels() const noexcept { return levels_; }
  /// Highest degree with nonzero support.
  int dimension() const noexcept { return static_cast<int>(levels_.size()) - 1; }
  /// The level in degree q, (0, 0) above the support.
  Level level(int q) const;

  friend bool operator==(const Cell& a, const Cell& b) { return a.levels_ == b.levels_; }
  friend std::strong_ordering operator<=>(const Cell& a, const Cell& b) {
    return std::lexicographical_compare_three_way(a.levels_.begin(), a.levels_.end(), b.levels_.begin(),
                                                  b.levels_.end());
  }

 private:
  Cell(ComplexPtr complex, std::vector<Level> levels);

  friend Cell make_cell(ComplexPtr k, std::vector<Level> levels);
  friend Cell unchecked_cell(ComplexPtr k, std::vector<Level> levels);

  ComplexPtr complex_;
  std::vector<Level> levels_;
};

/// `levels` lists degrees 0, 1, ...; everything above is zero. Throws
/// WrongDegree, NegativeEntry, BadAugmentation, BoundaryMismatch, or
/// InfiniteSupport when the last supplied level has x^- != x^+ (so the
/// support cannot stop there).
Cell make_cell(ComplexPtr k, std::vector<Cell::Level> levels);

/// d_n^sign x: levels below n kept, level n replaced by (x_n^sign, x_n^sign),
/// zero above.
Cell identity_at(int n, Sign sign, const Cell& x);

/// x o_n y = x - z + y where z = d_n^+ x = d_n^- y. Throws NotComposable.
Cell compose(int n, const Cell& x, const Cell& y);

/// The atom <b>. Throws NotUnital when the basis of k is not unital.
Cell atom(const ComplexPtr& k, BasisIndex b);

/// d_{n-1}^- <b> = <d^- b> and d_{n-1}^+ <b> = <d^+ b>. Throws
/// ZeroDimensional for points.
bool check_atom_boundary(const SimpleADC& k, BasisIndex b);

/// Every cell whose coefficients are at most `cap`, sorted.
std::vector<Cell> enumerate_cells(const ComplexPtr& k, int cap = 1);

/// nu f applied to x: f on every component.
Cell nu_map(const ChainMorphism& f, const Cell& x);

}  // namespace theta

#endif  // THETA_CELLS_HPP
