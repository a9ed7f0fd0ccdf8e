#pragma once

#include <map>
#include <span>
#include <vector>

#include "index_words.hpp"
#include "multivector.hpp"
#include "rational.hpp"

namespace extalg {

// Exponent words ordered by ascending total degree, ties broken
// lexicographically. This is the canonical monomial order for serialization.
struct GradedLexLess {
  bool operator()(const std::vector<int>& a, const std::vector<int>& b) const;
};

// Multivariate polynomial with exact rational coefficients over x_1..x_n.
// Zero coefficients are never stored.
class Polynomial {
 public:
  explicit Polynomial(int nvars);

  static Polynomial constant(int nvars, Rational value);
  static Polynomial variable(int nvars, int i);  // x_i, 1-based
  static Polynomial monomial(int nvars, std::vector<int> exps, Rational coeff);

  int nvars() const { return nvars_; }
  const std::map<std::vector<int>, Rational, GradedLexLess>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(std::vector<int> exps, const Rational& c);

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial operator*(const Rational& s) const;
  bool operator==(const Polynomial&) const = default;

  // Formal partial derivative with respect to x_i (1-based).
  Polynomial partial(int i) const;

  // Exact evaluation; powers of each coordinate are computed once and reused.
  Rational evaluate(std::span<const Rational> point) const;

 private:
  int nvars_;
  std::map<std::vector<int>, Rational, GradedLexLess> terms_;
};

// Differential form with polynomial coefficients on the trivial bundle over
// x_1..x_n: a sparse sum of f_I dx_I keyed by basis combinations. Mixed
// grades are allowed; a homogeneous form is concentrated in one key size.
class PolyForm {
 public:
  explicit PolyForm(int nvars);

  static PolyForm from_polynomial(const Polynomial& f);  // a 0-form

  int nvars() const { return nvars_; }
  const std::map<Combination, Polynomial>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const Combination& index, const Polynomial& f);

  PolyForm operator+(const PolyForm& o) const;
  bool operator==(const PolyForm&) const = default;

 private:
  int nvars_;
  std::map<Combination, Polynomial> terms_;
};

// Wedge of forms: combination-keyed wedge with polynomial coefficient
// products, signs from split_sign.
PolyForm wedge(const PolyForm& a, const PolyForm& b);

// d(f dx_I) = sum_i (df/dx_i) dx_i ^ dx_I; linear, grade-raising, d o d = 0.
PolyForm exterior_derivative(const PolyForm& a);

// Pointwise value: each coefficient polynomial evaluated exactly at x.
GradedElement evaluate(const PolyForm& a, std::span<const Rational> point);

}  // namespace extalg
