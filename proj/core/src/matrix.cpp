#include "theta/matrix.hpp"

#include <cassert>

namespace theta {

bool Matrix::is_nonnegative() const {
  for (const auto& v : data_)
    if (v < 0) return false;
  return true;
}

bool Matrix::is_zero() const {
  for (const auto& v : data_)
    if (v != 0) return false;
  return true;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
  return t;
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  assert(a.cols_ == b.rows_);
  Matrix out(a.rows_, b.cols_);
  for (std::size_t r = 0; r < a.rows_; ++r)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Integer& lhs = a.at(r, k);
      if (lhs == 0) continue;
      for (std::size_t c = 0; c < b.cols_; ++c) out.at(r, c) += lhs * b.at(k, c);
    }
  return out;
}

std::strong_ordering operator<=>(const Matrix& a, const Matrix& b) {
  if (auto cmp = a.rows_ <=> b.rows_; cmp != 0) return cmp;
  if (auto cmp = a.cols_ <=> b.cols_; cmp != 0) return cmp;
  for (std::size_t i = 0; i < a.data_.size(); ++i) {
    if (a.data_[i] != b.data_[i])
      return a.data_[i] < b.data_[i] ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

}  // namespace theta
