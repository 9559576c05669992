#ifndef THETA_MATRIX_HPP
#define THETA_MATRIX_HPP

#include <compare>
#include <cstddef>
#include <vector>

#include "theta/chain.hpp"

namespace theta {

/// Dense row-major integer matrix.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  Integer& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Integer& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  const std::vector<Integer>& data() const noexcept { return data_; }

  bool is_nonnegative() const;
  bool is_zero() const;
  Matrix transpose() const;

  static Matrix identity(std::size_t n);

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix&, const Matrix&) = default;
  friend std::strong_ordering operator<=>(const Matrix& a, const Matrix& b);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

}  // namespace theta

#endif  // THETA_MATRIX_HPP
