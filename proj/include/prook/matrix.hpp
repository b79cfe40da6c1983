#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "prook/combinatorics.hpp"

namespace prook {

/// Dense matrix of exact rationals, row-major.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols);

  static Matrix identity(std::size_t n);
  /// E_{i,j}: a single 1 at (i, j).
  static Matrix unit(std::size_t n, std::size_t i, std::size_t j);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  bool is_zero() const;
  Rational trace() const;

  /// Submatrix on the given rows and columns.
  Matrix block(const std::vector<std::size_t>& row_idx,
               const std::vector<std::size_t>& col_idx) const;

  Matrix& operator+=(const Matrix& other);
  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const Rational& q, Matrix a);
  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

std::string to_string(const Matrix& m);

}  // namespace prook
