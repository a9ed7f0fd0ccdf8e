#include "determinant.hpp"

#include <bit>

namespace extalg {

Rational det_leibniz(const Matrix& a, bool force) {
  if (a.rows() != a.cols()) throw DomainError("det: matrix not square");
  int n = a.rows();
  if (n > kLeibnizRefusalThreshold && !force) {
    throw RefusedError("det: Leibniz sum refused for n > 10 (force to override)");
  }
  Rational det;
  for (const auto& word : InjectionRange(n, n)) {
    Rational term(1);
    for (int i = 0; i < n && !term.is_zero(); ++i) {
      term *= a.at(i, word[static_cast<size_t>(i)] - 1);
    }
    if (term.is_zero()) continue;
    if (parity_of_word(word) < 0) {
      det -= term;
    } else {
      det += term;
    }
  }
  return det;
}

Rational minor_det(const Matrix& a, const Combination& rows, const Combination& cols) {
  if (rows.size() != cols.size()) throw DomainError("minor: row and column selections differ in size");
  if (rows.ambient != a.rows() || cols.ambient != a.cols()) {
    throw DimensionError("minor: selection ambient does not match matrix shape");
  }
  return det_leibniz(a.submatrix(rows.word, cols.word), /*force=*/true);
}

SubsetMinorTable::SubsetMinorTable(const Matrix& a, std::span<const int> rows) {
  int c = a.cols();
  if (c > 20) throw DomainError("subset minor table: too many columns");
  size_t size = size_t{1} << c;
  table_.assign(size, Rational());
  table_[0] = Rational(1);
  size_t depth = rows.size();
  for (std::uint32_t mask = 1; mask < size; ++mask) {
    size_t k = static_cast<size_t>(std::popcount(mask));
    if (k > depth) continue;
    int row = rows[k - 1] - 1;
    Rational det;
    int sign = ((k - 1) % 2 == 0) ? 1 : -1;  // (-1)^((k-1)+t), t = 0 first
    for (std::uint32_t bits = mask; bits != 0; bits &= bits - 1) {
      int j = std::countr_zero(bits);
      const Rational& entry = a.at(row, j);
      if (!entry.is_zero()) {
        Rational term = entry * table_[mask ^ (std::uint32_t{1} << j)];
        if (sign > 0) {
          det += term;
        } else {
          det -= term;
        }
      }
      sign = -sign;
    }
    table_[mask] = std::move(det);
  }
}

namespace {

std::uint32_t word_mask(std::span<const int> word) {
  std::uint32_t mask = 0;
  for (int v : word) mask |= std::uint32_t{1} << (v - 1);
  return mask;
}

}  // namespace

Rational det_laplace(const Matrix& a, const Combination& rowset) {
  if (a.rows() != a.cols()) throw DomainError("det: matrix not square");
  int n = a.rows();
  int m = rowset.size();
  if (rowset.ambient != n) throw DomainError("laplace: rowset ambient does not match matrix size");
  if (m < 1 || m > n) throw DomainError("laplace: rowset size must be in [1, n]");

  Combination rest = complement(rowset);
  SubsetMinorTable top(a, rowset.word);
  SubsetMinorTable bottom(a, rest.word);

  int row_sum = 0;
  for (int v : rowset.word) row_sum += v;
  std::uint32_t full = (n == 32) ? ~std::uint32_t{0} : ((std::uint32_t{1} << n) - 1);

  Rational det;
  for (const auto& cols : CombinationRange(n, m)) {
    int col_sum = 0;
    for (int v : cols) col_sum += v;
    std::uint32_t mask = word_mask(cols);
    Rational term = top.at(mask) * bottom.at(full ^ mask);
    if ((row_sum + col_sum) % 2 == 0) {
      det += term;
    } else {
      det -= term;
    }
  }
  return det;
}

Rational cauchy_binet(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.cols() || a.cols() != b.rows()) {
    throw DimensionError("cauchy-binet: shapes do not compose to a square product");
  }
  int r = a.rows();
  int k = a.cols();
  Rational sum;
  if (r > k) return sum;

  std::vector<int> all(static_cast<size_t>(r));
  for (int i = 0; i < r; ++i) all[static_cast<size_t>(i)] = i + 1;
  Combination a_rows(r, all);
  Combination b_cols(r, all);
  for (const auto& word : CombinationRange(k, r)) {
    Combination mid(k, word);
    sum += minor_det(a, a_rows, mid) * minor_det(b, mid, b_cols);
  }
  return sum;
}

}  // namespace extalg
