#include "theta/morphism.hpp"

#include <string>

#include "theta/errors.hpp"

namespace theta {

namespace {

std::size_t block_count(const AugmentedDirectedComplex& source) {
  return static_cast<std::size_t>(source.top_degree() + 1);
}

}  // namespace

bool same_complex(const ComplexPtr& a, const ComplexPtr& b) {
  return a == b || (a && b && *a == *b);
}

ChainMorphism::ChainMorphism(ComplexPtr source, ComplexPtr target, std::vector<Matrix> blocks)
    : source_(std::move(source)), target_(std::move(target)), blocks_(std::move(blocks)) {
  if (blocks_.size() != block_count(*source_))
    throw Error(ErrorCode::ShapeMismatch, "expected " + std::to_string(block_count(*source_)) +
                                              " degree blocks, got " + std::to_string(blocks_.size()));
  for (std::size_t q = 0; q < blocks_.size(); ++q) {
    const int deg = static_cast<int>(q);
    if (blocks_[q].rows() != target_->rank(deg) || blocks_[q].cols() != source_->rank(deg))
      throw Error(ErrorCode::ShapeMismatch, "degree " + std::to_string(q) + " block should be " +
                                                std::to_string(target_->rank(deg)) + "x" +
                                                std::to_string(source_->rank(deg)));
  }
}

ChainMorphism ChainMorphism::identity(const ComplexPtr& k) {
  std::vector<Matrix> blocks;
  for (int q = 0; q <= k->top_degree(); ++q) blocks.push_back(Matrix::identity(k->rank(q)));
  return ChainMorphism(k, k, std::move(blocks));
}

Matrix ChainMorphism::block(int q) const {
  if (q >= 0 && static_cast<std::size_t>(q) < blocks_.size()) return blocks_[static_cast<std::size_t>(q)];
  return Matrix(target_->rank(q), 0);
}

Chain ChainMorphism::image(BasisIndex b) const {
  const int q = source_->degree(b);
  const Matrix& m = blocks_[static_cast<std::size_t>(q)];
  const std::size_t col = source_->position_in_degree(b);
  const auto& rows = target_->basis_of_degree(q);
  Chain out(q);
  for (std::size_t r = 0; r < m.rows(); ++r) out.add(rows[r], m.at(r, col));
  return out;
}

Chain ChainMorphism::apply(const Chain& x) const {
  Chain out(x.degree());
  for (const auto& [b, c] : x.terms()) {
    Chain term = image(b);
    term *= c;
    out += term;
  }
  return out;
}

std::strong_ordering operator<=>(const ChainMorphism& a, const ChainMorphism& b) {
  const std::size_t n = std::min(a.blocks_.size(), b.blocks_.size());
  for (std::size_t q = 0; q < n; ++q)
    if (auto cmp = a.blocks_[q] <=> b.blocks_[q]; cmp != 0) return cmp;
  return a.blocks_.size() <=> b.blocks_.size();
}

ChainMorphism validate_morphism_general(ComplexPtr source, ComplexPtr target, std::vector<Matrix> blocks) {
  ChainMorphism f(std::move(source), std::move(target), std::move(blocks));
  for (const Matrix& m : f.blocks())
    if (!m.is_nonnegative()) throw Error(ErrorCode::NegativeEntry, "morphism matrix has a negative entry");
  const auto& k = *f.source();
  const auto& l = *f.target();
  for (BasisIndex b : k.basis_of_degree(0)) {
    if (l.augment(f.image(b)) != k.augmentation(b))
      throw Error(ErrorCode::NotAugmented, "augmentation not preserved on basis element " + std::to_string(b));
  }
  for (BasisIndex b = 0; b < k.size(); ++b) {
    if (k.degree(b) == 0) continue;
    if (l.boundary_of(f.image(b)) != f.apply(k.boundary(b)))
      throw Error(ErrorCode::NotChainMap, "boundary not preserved on basis element " + std::to_string(b));
  }
  return f;
}

ChainMorphism compose_morphisms(const ChainMorphism& g, const ChainMorphism& f) {
  if (!same_complex(f.target(), g.source()))
    throw Error(ErrorCode::SourceTargetMismatch, "target of the first morphism is not the source of the second");
  std::vector<Matrix> blocks;
  for (int q = 0; q <= f.source()->top_degree(); ++q) blocks.push_back(g.block(q) * f.block(q));
  return ChainMorphism(f.source(), g.target(), std::move(blocks));
}

}  // namespace theta
