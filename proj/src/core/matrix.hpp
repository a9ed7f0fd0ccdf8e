#pragma once

#include <vector>

#include "index_words.hpp"
#include "rational.hpp"

namespace extalg {

// Dense exact rational matrix, row-major. Entry access is 0-based; row and
// column selections arrive as 1-based combinations.
class Matrix {
 public:
  Matrix(int rows, int cols);
  Matrix(int rows, int cols, std::vector<Rational> entries);

  static Matrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  const Rational& at(int i, int j) const { return entries_[index(i, j)]; }
  Rational& at(int i, int j) { return entries_[index(i, j)]; }

  const std::vector<Rational>& entries() const { return entries_; }

  Matrix transpose() const;
  Matrix operator*(const Matrix& o) const;
  Matrix operator+(const Matrix& o) const;

  // Submatrix on 1-based row and column selections, kept in the given order.
  Matrix submatrix(std::span<const int> rows, std::span<const int> cols) const;

  bool operator==(const Matrix&) const = default;

 private:
  size_t index(int i, int j) const {
    return static_cast<size_t>(i) * static_cast<size_t>(cols_) + static_cast<size_t>(j);
  }

  int rows_;
  int cols_;
  std::vector<Rational> entries_;
};

}  // namespace extalg
