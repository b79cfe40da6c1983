#include "prook/matrix.hpp"

#include <sstream>

namespace prook {

Matrix::Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::unit(std::size_t n, std::size_t i, std::size_t j) {
  Matrix m(n, n);
  m(i, j) = 1;
  return m;
}

bool Matrix::is_zero() const {
  for (const auto& x : data_)
    if (x != 0) return false;
  return true;
}

Rational Matrix::trace() const {
  if (rows_ != cols_) throw Error("trace of a non-square matrix");
  Rational t = 0;
  for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
  return t;
}

Matrix Matrix::block(const std::vector<std::size_t>& row_idx,
                     const std::vector<std::size_t>& col_idx) const {
  Matrix out(row_idx.size(), col_idx.size());
  for (std::size_t i = 0; i < row_idx.size(); ++i)
    for (std::size_t j = 0; j < col_idx.size(); ++j)
      out(i, j) = (*this)(row_idx[i], col_idx[j]);
  return out;
}

Matrix& Matrix::operator+=(const Matrix& other) {
  if (rows_ != other.rows_ || cols_ != other.cols_)
    throw Error("matrix sum of incompatible shapes");
  for (std::size_t k = 0; k < data_.size(); ++k)
    if (other.data_[k] != 0) data_[k] += other.data_[k];
  return *this;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw Error("matrix product of incompatible shapes");
  Matrix out(a.rows_, b.cols_);
  // Action matrices are mostly zero; skip zero factors.
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Rational& x = a(i, k);
      if (x == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        const Rational& y = b(k, j);
        if (y != 0) out(i, j) += x * y;
      }
    }
  return out;
}

Matrix operator*(const Rational& q, Matrix a) {
  for (auto& x : a.data_)
    if (x != 0) x *= q;
  return a;
}

std::string to_string(const Matrix& m) {
  std::ostringstream os;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) os << ' ';
      os << m(i, j).str();
    }
    os << '\n';
  }
  return os.str();
}

}  // namespace prook
