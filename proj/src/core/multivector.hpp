#pragma once

#include <map>
#include <optional>
#include <utility>

#include "determinant.hpp"
#include "index_words.hpp"
#include "matrix.hpp"
#include "rational.hpp"

namespace extalg {

// Sparse grade-m element of the m-th exterior power of an n-dimensional
// space, keyed by strictly increasing basis words. Zero coefficients are
// never stored, so equality is structural equality of canonical forms.
//
// A zero multivector may carry grade > ambient (the wedge of too many
// factors); it then has no representable basis words and stays empty.
class Multivector {
 public:
  Multivector(int ambient, int grade);

  static Multivector basis(int ambient, const Combination& index, Rational coeff = Rational(1));
  static Multivector scalar(int ambient, Rational value);

  int ambient() const { return ambient_; }
  int grade() const { return grade_; }
  const std::map<Combination, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  // Coefficient at a basis word (zero when absent).
  Rational coeff(const Combination& index) const;

  // Accumulates c * e_index, dropping the term if it cancels.
  void add_term(const Combination& index, const Rational& c);

  Multivector operator+(const Multivector& o) const;
  Multivector operator-(const Multivector& o) const;
  Multivector operator*(const Rational& s) const;
  bool operator==(const Multivector&) const = default;

 private:
  int ambient_;
  int grade_;
  std::map<Combination, Rational> terms_;
};

// Element of the full graded algebra: a chain of multivectors summed over
// grades 0..n. Absent grades are zero.
class GradedElement {
 public:
  explicit GradedElement(int ambient);
  GradedElement(const Multivector& part);  // NOLINT(google-explicit-constructor)

  static GradedElement scalar(int ambient, Rational value);

  int ambient() const { return ambient_; }
  const std::map<int, Multivector>& parts() const { return parts_; }
  bool is_zero() const { return parts_.empty(); }

  // The grade-m part (zero multivector when absent).
  Multivector part(int grade) const;
  void add_part(const Multivector& mv);

  GradedElement operator+(const GradedElement& o) const;
  GradedElement operator*(const Rational& s) const;
  bool operator==(const GradedElement&) const = default;

 private:
  int ambient_;
  std::map<int, Multivector> parts_;
};

// Dual-space values share the primal representation; the wrapper only
// records which side of the pairing they live on.
template <typename T>
struct Dual {
  T value;
};

inline Dual<Multivector> dual(Multivector v) { return {std::move(v)}; }
inline Dual<GradedElement> dual(GradedElement v) { return {std::move(v)}; }

// Exterior product. Coefficient at K sums split_sign(I, J) * u_I * v_J over
// disjoint splits; grade p+q above the ambient gives the zero multivector.
Multivector wedge(const Multivector& u, const Multivector& v);
GradedElement wedge(const GradedElement& u, const GradedElement& v);

// Left wedge multiplication by a fixed element, extended gradewise.
class ClutchOperator {
 public:
  explicit ClutchOperator(GradedElement u) : u_(std::move(u)) {}
  GradedElement operator()(const GradedElement& w) const { return wedge(u_, w); }

 private:
  GradedElement u_;
};

inline ClutchOperator clutch(GradedElement u) { return ClutchOperator(std::move(u)); }

// Compound matrix: the exterior-power functor on linear maps. Entry
// (rank I, rank J) is the m x m minor of a on rows I, columns J; rows and
// columns are ordered by lexicographic combination rank.
Matrix exterior_power_map(const Matrix& a, int m);

// Induced action on multivectors: coordinates transform by the compound
// matrix; on a basis word the result is the wedge of the selected columns.
Multivector apply_map(const Matrix& a, const Multivector& v);
GradedElement apply_map(const Matrix& a, const GradedElement& v);

// Dual-basis pairing of equal grades: sum over combinations of w_I * v_I.
Rational pair(const Dual<Multivector>& w, const Multivector& v);

// Chain evaluation: gradewise pairing summed over all grades.
Rational pair_chains(const Dual<GradedElement>& w, const GradedElement& v);

// Interior product against a grade-1 dual vector. On basis words,
// contract(e*_k, e_I) is (-1)^(position of k in I) e_{I minus k}, or zero
// when k is absent.
Multivector contract(const Dual<Multivector>& x, const Multivector& v);

// The (coefficient, basis word) of a one-term multivector, or nullopt.
std::optional<std::pair<Rational, Combination>> simple_monomial(const Multivector& v);

}  // namespace extalg
