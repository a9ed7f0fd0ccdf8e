#include "matrix.hpp"

namespace extalg {

Matrix::Matrix(int rows, int cols) : rows_(rows), cols_(cols) {
  if (rows < 0 || cols < 0) throw DomainError("matrix: negative dimensions");
  entries_.assign(static_cast<size_t>(rows) * static_cast<size_t>(cols), Rational());
}

Matrix::Matrix(int rows, int cols, std::vector<Rational> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (rows < 0 || cols < 0) throw DomainError("matrix: negative dimensions");
  if (entries_.size() != static_cast<size_t>(rows) * static_cast<size_t>(cols)) {
    throw DimensionError("matrix: entry count does not match rows*cols");
  }
}

Matrix Matrix::identity(int n) {
  Matrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = Rational(1);
  return m;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) {
      t.at(j, i) = at(i, j);
    }
  }
  return t;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (cols_ != o.rows_) throw DimensionError("matrix product: inner dimension mismatch");
  Matrix out(rows_, o.cols_);
  for (int i = 0; i < rows_; ++i) {
    for (int k = 0; k < cols_; ++k) {
      const Rational& aik = at(i, k);
      if (aik.is_zero()) continue;
      for (int j = 0; j < o.cols_; ++j) {
        out.at(i, j) += aik * o.at(k, j);
      }
    }
  }
  return out;
}

Matrix Matrix::operator+(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionError("matrix sum: shape mismatch");
  Matrix out(rows_, cols_);
  for (size_t k = 0; k < entries_.size(); ++k) out.entries_[k] = entries_[k] + o.entries_[k];
  return out;
}

Matrix Matrix::submatrix(std::span<const int> rows, std::span<const int> cols) const {
  for (int r : rows) {
    if (r < 1 || r > rows_) throw DomainError("submatrix: row index out of range");
  }
  for (int c : cols) {
    if (c < 1 || c > cols_) throw DomainError("submatrix: column index out of range");
  }
  Matrix out(static_cast<int>(rows.size()), static_cast<int>(cols.size()));
  for (size_t i = 0; i < rows.size(); ++i) {
    for (size_t j = 0; j < cols.size(); ++j) {
      out.at(static_cast<int>(i), static_cast<int>(j)) = at(rows[i] - 1, cols[j] - 1);
    }
  }
  return out;
}

}  // namespace extalg
