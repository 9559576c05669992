#include "theta/verify/oracles.hpp"

#include <algorithm>

#include "theta/errors.hpp"

namespace theta::verify {

namespace {

// All chains of degree q in k with coefficients in [0, bound].
std::vector<Chain> all_chains(const AugmentedDirectedComplex& k, int q, int bound) {
  const auto& basis = k.basis_of_degree(q);
  std::vector<Chain> out;
  std::vector<int> coeffs(basis.size(), 0);
  while (true) {
    Chain c(q);
    for (std::size_t i = 0; i < basis.size(); ++i) c.add(basis[i], coeffs[i]);
    out.push_back(std::move(c));
    std::size_t i = 0;
    while (i < coeffs.size() && coeffs[i] == bound) coeffs[i++] = 0;
    if (i == coeffs.size()) break;
    ++coeffs[i];
  }
  return out;
}

class HomSearch {
 public:
  HomSearch(ComplexPtr k, ComplexPtr l, int bound, AugmentationLaw law)
      : k_(std::move(k)), l_(std::move(l)), law_(law) {
    for (int q = 0; q <= k_->top_degree(); ++q) {
      candidates_.push_back(all_chains(*l_, q, bound));
      for (BasisIndex b : k_->basis_of_degree(q)) order_.push_back(b);
    }
    images_.assign(k_->size(), Chain(0));
  }

  std::vector<ChainMorphism> run() {
    if (k_->empty()) {
      out_.push_back(ChainMorphism(k_, l_, {}));
      return out_;
    }
    search(0);
    std::sort(out_.begin(), out_.end());
    return std::move(out_);
  }

 private:
  Chain mapped(const Chain& x) const {
    Chain out(x.degree());
    for (const auto& [b, c] : x.terms()) out += c * images_[b];
    return out;
  }

  bool admissible(BasisIndex b, const Chain& y) const {
    if (k_->degree(b) == 0) {
      const Integer want = law_ == AugmentationLaw::preserve ? k_->augmentation(b) : Integer(0);
      return l_->augment(y) == want;
    }
    return l_->boundary_of(y) == mapped(k_->boundary(b));
  }

  void search(std::size_t i) {
    if (i == order_.size()) {
      out_.push_back(build());
      return;
    }
    const BasisIndex b = order_[i];
    for (const Chain& y : candidates_[static_cast<std::size_t>(k_->degree(b))]) {
      if (!admissible(b, y)) continue;
      images_[b] = y;
      search(i + 1);
    }
    images_[b] = Chain(0);
  }

  ChainMorphism build() const {
    std::vector<Matrix> blocks;
    for (int q = 0; q <= k_->top_degree(); ++q) blocks.emplace_back(l_->rank(q), k_->rank(q));
    for (BasisIndex b = 0; b < k_->size(); ++b) {
      Matrix& m = blocks[static_cast<std::size_t>(k_->degree(b))];
      for (const auto& [t, c] : images_[b].terms()) m.at(l_->position_in_degree(t), k_->position_in_degree(b)) = c;
    }
    if (law_ == AugmentationLaw::preserve) return validate_morphism_general(k_, l_, std::move(blocks));
    return ChainMorphism(k_, l_, std::move(blocks));
  }

  ComplexPtr k_;
  ComplexPtr l_;
  AugmentationLaw law_;
  std::vector<std::vector<Chain>> candidates_;
  std::vector<BasisIndex> order_;
  std::vector<Chain> images_;
  std::vector<ChainMorphism> out_;
};

std::size_t count_monotone(std::size_t remaining, std::size_t floor, std::size_t b) {
  if (remaining == 0) return 1;
  std::size_t total = 0;
  for (std::size_t v = floor; v < b; ++v) total += count_monotone(remaining - 1, v, b);
  return total;
}

}  // namespace

std::vector<ChainMorphism> brute_force_hom(const ComplexPtr& k, const ComplexPtr& l, int bound, AugmentationLaw law) {
  return HomSearch(k, l, bound, law).run();
}

std::size_t monotone_map_count(std::size_t a, std::size_t b) { return count_monotone(a, 0, b); }

std::size_t dimension_sequence_count(std::size_t max_length) {
  if (max_length == 0) return 0;
  std::size_t total = 0;
  std::size_t catalan = 1;  // C_0
  for (std::size_t n = 0; 2 * n + 1 <= max_length; ++n) {
    total += catalan;
    catalan = catalan * 2 * (2 * n + 1) / (n + 2);
  }
  return total;
}

std::vector<Cell> brute_force_cells(const ComplexPtr& k, int cap) {
  std::vector<Cell> out;
  if (k->empty()) return out;
  const std::size_t levels = static_cast<std::size_t>(k->top_degree() + 1);
  std::vector<std::vector<Chain>> chains;
  for (std::size_t q = 0; q < levels; ++q) chains.push_back(all_chains(*k, static_cast<int>(q), cap));
  // One odometer digit per chain: minus and plus for every level.
  std::vector<std::size_t> digit(2 * levels, 0);
  while (true) {
    std::vector<Cell::Level> ls;
    for (std::size_t q = 0; q < levels; ++q) ls.push_back(Cell::Level{chains[q][digit[2 * q]], chains[q][digit[2 * q + 1]]});
    try {
      out.push_back(make_cell(k, std::move(ls)));
    } catch (const Error&) {
    }
    std::size_t i = 0;
    while (i < digit.size() && digit[i] + 1 == chains[i / 2].size()) digit[i++] = 0;
    if (i == digit.size()) break;
    ++digit[i];
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool column_is_separated(const SimpleADC& l, const ChainMorphism& f, BasisIndex b) {
  const Chain col = f.image(b);
  const auto& dims = l.dims();
  std::vector<BasisIndex> support;
  for (const auto& [t, c] : col.terms()) {
    if (c != 1) return false;
    support.push_back(t);
  }
  if (support.empty()) return true;
  const int n = dims[support.front()];
  for (BasisIndex t : support)
    if (dims[t] != n) return false;
  for (std::size_t i = 1; i < support.size(); ++i) {
    bool lower = false;
    for (BasisIndex e = support[i - 1] + 1; e < support[i]; ++e) lower = lower || dims[e] < n;
    if (!lower) return false;
  }
  return true;
}

}  // namespace theta::verify
