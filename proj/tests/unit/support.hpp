#ifndef THETA_TESTS_SUPPORT_HPP
#define THETA_TESTS_SUPPORT_HPP

#include <gtest/gtest.h>

#include <initializer_list>
#include <optional>

#include "theta/errors.hpp"
#include "theta/matrix.hpp"
#include "theta/simple_complex.hpp"

namespace theta::test {

inline SimpleADC simple(std::initializer_list<int> dims, Convention c = Convention::standard) {
  return SimpleADC(DimensionSequence(std::vector<int>(dims)), c);
}

/// Row-major literal; `{}` gives a 0 x 0 block, use Matrix(r, c) for others.
inline Matrix mat(std::initializer_list<std::initializer_list<int>> rows) {
  const std::size_t cols = rows.size() ? rows.begin()->size() : 0;
  Matrix m(rows.size(), cols);
  std::size_t r = 0;
  for (const auto& row : rows) {
    std::size_t c = 0;
    for (int v : row) m.at(r, c++) = v;
    ++r;
  }
  return m;
}

template <typename Fn>
std::optional<ErrorCode> error_of(Fn&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return std::nullopt;
}

}  // namespace theta::test

#define EXPECT_THETA_ERROR(code, expr) EXPECT_EQ(::theta::test::error_of([&] { (void)(expr); }), (code))

#endif  // THETA_TESTS_SUPPORT_HPP
