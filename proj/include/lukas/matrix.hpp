#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "lukas/error.hpp"
#include "lukas/types.hpp"

namespace lukas {

/// Dense row-major matrix over an arbitrary ring element type.
template <class Scalar>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  void swap_rows(std::size_t a, std::size_t b) {
    for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
  }

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

inline Integer exact_div(const Integer& a, const Integer& b) {
  if (!mpz_divisible_p(a.get_mpz_t(), b.get_mpz_t())) throw Error(Errc::non_integral, "inexact integer division");
  return a / b;
}

/// Fraction-free (Bareiss) determinant over an integral domain. Scalar needs
/// ring operators, a value-initialized zero, and an exact_div(a, b) overload.
template <class Scalar>
Scalar determinant(Matrix<Scalar> m) {
  const std::size_t n = m.rows();
  if (n != m.cols()) throw Error(Errc::invalid_argument, "determinant of a non-square matrix");
  if (n == 0) return Scalar(1);
  const Scalar zero{};
  Scalar prev(1);
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == zero) {
      std::size_t p = k + 1;
      while (p < n && m(p, k) == zero) ++p;
      if (p == n) return zero;
      m.swap_rows(k, p);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m(i, j) = exact_div(m(k, k) * m(i, j) - m(i, k) * m(k, j), prev);
      }
    }
    prev = m(k, k);
  }
  Scalar det = m(n - 1, n - 1);
  return negate ? Scalar(-det) : det;
}

}  // namespace lukas
