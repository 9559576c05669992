#include "theta/duality.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "theta/errors.hpp"

namespace theta {

namespace {

const std::vector<BasisIndex> kNone;

}  // namespace

CochainComplex::CochainComplex(const SimpleADC& k)
    : dims_(k.dims()), convention_(k.convention()), degrees_(k.dims().dims()), eta_(0) {
  const auto& kc = *k.complex();
  for (BasisIndex c = 0; c < size(); ++c) coboundary_.emplace_back(degrees_[c] + 1);
  for (BasisIndex x = 0; x < size(); ++x)
    for (const auto& [c, coeff] : kc.boundary(x).terms()) coboundary_[c].add(x, coeff);
  for (BasisIndex b : kc.basis_of_degree(0)) eta_.add(b, kc.augmentation(b));
  position_.resize(size());
  for (BasisIndex c = 0; c < size(); ++c) {
    const auto q = static_cast<std::size_t>(degrees_[c]);
    if (by_degree_.size() <= q) by_degree_.resize(q + 1);
    position_[c] = by_degree_[q].size();
    by_degree_[q].push_back(c);
  }
}

const std::vector<BasisIndex>& CochainComplex::basis_of_degree(int q) const {
  if (q < 0 || q >= static_cast<int>(by_degree_.size())) return kNone;
  return by_degree_[static_cast<std::size_t>(q)];
}

Chain CochainComplex::coboundary_of(const Chain& x) const {
  Chain out(x.degree() + 1);
  for (const auto& [c, coeff] : x.terms()) {
    Chain term = coboundary(c);
    term *= coeff;
    out += term;
  }
  return out;
}

CochainPtr dualize_object(const SimpleADC& k) { return std::make_shared<const CochainComplex>(k); }

ComplexPtr transpose_back(const CochainComplex& c) {
  ComplexData data;
  data.degrees = c.dims().dims();
  for (BasisIndex x = 0; x < c.size(); ++x) data.boundaries.emplace_back(c.degree(x) - 1);
  data.augmentation.assign(c.size(), 0);
  for (BasisIndex y = 0; y < c.size(); ++y)
    for (const auto& [x, coeff] : c.coboundary(y).terms()) data.boundaries[x].add(y, coeff);
  for (const auto& [b, coeff] : c.coaugmentation().terms()) data.augmentation[b] = coeff;
  return make_complex(std::move(data));
}

Chain window_coboundary(const DimensionSequence& dims, BasisIndex q, Convention convention) {
  const int n = dims[q];
  Chain before(n + 1), after(n + 1);
  for (BasisIndex r = q; r-- > 0 && dims[r] > n;)
    if (dims[r] == n + 1) before.add(r, 1);
  for (BasisIndex s = q + 1; s < dims.size() && dims[s] > n; ++s)
    if (dims[s] == n + 1) after.add(s, 1);
  return convention == Convention::standard ? before - after : after - before;
}

CochainMorphism::CochainMorphism(CochainPtr source, CochainPtr target, std::vector<Matrix> blocks)
    : source_(std::move(source)), target_(std::move(target)), blocks_(std::move(blocks)) {
  const auto expected = static_cast<std::size_t>(source_->top_degree() + 1);
  if (blocks_.size() != expected)
    throw Error(ErrorCode::ShapeMismatch, "expected " + std::to_string(expected) + " degree blocks");
  for (std::size_t q = 0; q < blocks_.size(); ++q) {
    const int deg = static_cast<int>(q);
    if (blocks_[q].rows() != target_->rank(deg) || blocks_[q].cols() != source_->rank(deg))
      throw Error(ErrorCode::ShapeMismatch, "degree " + std::to_string(q) + " block has the wrong shape");
  }
}

Matrix CochainMorphism::block(int q) const {
  if (q >= 0 && static_cast<std::size_t>(q) < blocks_.size()) return blocks_[static_cast<std::size_t>(q)];
  return Matrix(target_->rank(q), 0);
}

Chain CochainMorphism::image(BasisIndex c) const {
  const int q = source_->degree(c);
  const Matrix& m = blocks_[static_cast<std::size_t>(q)];
  const std::size_t col = source_->position_in_degree(c);
  const auto& rows = target_->basis_of_degree(q);
  Chain out(q);
  for (std::size_t r = 0; r < m.rows(); ++r) out.add(rows[r], m.at(r, col));
  return out;
}

Chain CochainMorphism::apply(const Chain& x) const {
  Chain out(x.degree());
  for (const auto& [c, coeff] : x.terms()) {
    Chain term = image(c);
    term *= coeff;
    out += term;
  }
  return out;
}

CochainMorphism dualize_morphism(const ChainMorphism& f, const CochainPtr& dual_source,
                                 const CochainPtr& dual_target) {
  // dual_source is dual(target of f), dual_target is dual(source of f).
  std::vector<Matrix> blocks;
  for (int q = 0; q <= dual_source->top_degree(); ++q) blocks.push_back(f.block(q).transpose());
  return CochainMorphism(dual_source, dual_target, std::move(blocks));
}

ChainMorphism transpose_morphism(const CochainMorphism& g, const ComplexPtr& source, const ComplexPtr& target) {
  std::vector<Matrix> blocks;
  for (int q = 0; q <= source->top_degree(); ++q) blocks.push_back(g.block(q).transpose());
  return ChainMorphism(source, target, std::move(blocks));
}

CochainMorphism compose_cochain(const CochainMorphism& h, const CochainMorphism& g) {
  if (!(g.target() == h.source() || *g.target() == *h.source()))
    throw Error(ErrorCode::SourceTargetMismatch, "target of the first cochain map is not the source of the second");
  std::vector<Matrix> blocks;
  for (int q = 0; q <= g.source()->top_degree(); ++q) blocks.push_back(h.block(q) * g.block(q));
  return CochainMorphism(g.source(), h.target(), std::move(blocks));
}

CochainMorphism validate_cochain_morphism(CochainPtr source, CochainPtr target, std::vector<Matrix> blocks) {
  CochainMorphism g(std::move(source), std::move(target), std::move(blocks));
  for (const Matrix& m : g.blocks())
    if (!m.is_nonnegative()) throw Error(ErrorCode::NegativeEntry, "cochain map has a negative entry");
  const auto& s = *g.source();
  const auto& t = *g.target();
  for (BasisIndex c = 0; c < s.size(); ++c) {
    if (t.coboundary_of(g.image(c)) != g.apply(s.coboundary(c)))
      throw Error(ErrorCode::NotCochainMap, "coboundary not preserved on basis element " + std::to_string(c));
  }
  if (g.apply(s.coaugmentation()) != t.coaugmentation())
    throw Error(ErrorCode::NotCoaugmented, "coaugmentation not preserved");
  return g;
}

namespace {

class CochainHomSearch {
 public:
  CochainHomSearch(CochainPtr source, CochainPtr target, int bound)
      : source_(std::move(source)), target_(std::move(target)) {
    for (int q = source_->top_degree(); q >= 0; --q)
      for (BasisIndex c : source_->basis_of_degree(q)) order_.push_back(c);
    for (int q = 0; q <= source_->top_degree(); ++q) {
      std::map<Chain, std::vector<Chain>> by_coboundary;
      const auto& basis = target_->basis_of_degree(q);
      std::vector<int> coeffs(basis.size(), 0);
      while (true) {
        Chain col(q);
        for (std::size_t i = 0; i < basis.size(); ++i) col.add(basis[i], coeffs[i]);
        by_coboundary[target_->coboundary_of(col)].push_back(std::move(col));
        std::size_t i = 0;
        while (i < coeffs.size() && coeffs[i] == bound) coeffs[i++] = 0;
        if (i == coeffs.size()) break;
        ++coeffs[i];
      }
      columns_.push_back(std::move(by_coboundary));
    }
    images_.assign(source_->size(), Chain(0));
  }

  std::vector<CochainMorphism> run() {
    assign(0);
    std::sort(out_.begin(), out_.end());
    return std::move(out_);
  }

 private:
  Chain mapped(const Chain& x) const {
    Chain out(x.degree());
    for (const auto& [c, coeff] : x.terms()) {
      Chain term = images_[c];
      term *= coeff;
      out += term;
    }
    return out;
  }

  void assign(std::size_t i) {
    if (i == order_.size()) {
      if (mapped(source_->coaugmentation()) == target_->coaugmentation()) out_.push_back(build());
      return;
    }
    const BasisIndex c = order_[i];
    const int q = source_->degree(c);
    const Chain required = mapped(source_->coboundary(c));
    const auto& table = columns_[static_cast<std::size_t>(q)];
    const auto it = table.find(required);
    if (it == table.end()) return;
    for (const Chain& col : it->second) {
      images_[c] = col;
      assign(i + 1);
    }
    images_[c] = Chain(q);
  }

  CochainMorphism build() const {
    std::vector<Matrix> blocks;
    for (int q = 0; q <= source_->top_degree(); ++q) blocks.emplace_back(target_->rank(q), source_->rank(q));
    for (BasisIndex c = 0; c < source_->size(); ++c) {
      Matrix& m = blocks[static_cast<std::size_t>(source_->degree(c))];
      for (const auto& [t, coeff] : images_[c].terms())
        m.at(target_->position_in_degree(t), source_->position_in_degree(c)) = coeff;
    }
    return CochainMorphism(source_, target_, std::move(blocks));
  }

  CochainPtr source_;
  CochainPtr target_;
  std::vector<BasisIndex> order_;
  std::vector<std::map<Chain, std::vector<Chain>>> columns_;
  std::vector<Chain> images_;
  std::vector<CochainMorphism> out_;
};

}  // namespace

std::vector<CochainMorphism> enumerate_cochain_hom(const CochainPtr& source, const CochainPtr& target,
                                                   int entry_bound) {
  return CochainHomSearch(source, target, entry_bound).run();
}

}  // namespace theta
