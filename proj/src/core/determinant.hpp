#pragma once

#include <cstdint>

#include "matrix.hpp"

namespace extalg {

// Signed-sum determinant engines. det_leibniz is the ground-truth definition
// (sum over injections of the full index set); det_laplace and cauchy_binet
// are independent routes used to cross-check it and the compound matrices.

// Number of rows above which the factorial Leibniz sum is refused unless
// forced. 10 * 10! products is the desk-scale ceiling.
inline constexpr int kLeibnizRefusalThreshold = 10;

// Sum over all injections b of {1..n} into itself of parity(b) * prod a[i, b(i)].
// Throws RefusedError when n exceeds the threshold and force is not set.
Rational det_leibniz(const Matrix& a, bool force = false);

// Determinant of the submatrix selected by 1-based row and column
// combinations of equal size.
Rational minor_det(const Matrix& a, const Combination& rows, const Combination& cols);

// Generalized Laplace expansion of det(a) along a fixed row set: sum over
// column combinations J of (-1)^(sum rowset + sum J) * minor(rowset, J) *
// minor(complement rowset, complement J). Backed by a memoized column-subset
// recursion, not by Leibniz.
Rational det_laplace(const Matrix& a, const Combination& rowset);

// Sum over column combinations K of size r of minor(a, all rows, K) *
// minor(b, K, all cols); equals det(a*b). Zero when r > k.
Rational cauchy_binet(const Matrix& a, const Matrix& b);

// All minors of a fixed (ordered) row selection against every column subset,
// by expansion along the last row of the prefix: the value for a subset S
// with |S| = k is the determinant on rows[0..k-1] and columns S.
class SubsetMinorTable {
 public:
  SubsetMinorTable(const Matrix& a, std::span<const int> rows);
  const Rational& at(std::uint32_t column_mask) const { return table_[column_mask]; }

 private:
  std::vector<Rational> table_;
};

}  // namespace extalg
