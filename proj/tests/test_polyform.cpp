#include "doctest.h"
#include "polyform.hpp"
#include "rng.hpp"

using extalg::Combination;
using extalg::PolyForm;
using extalg::Polynomial;
using extalg::Rational;

namespace {

Polynomial x(int nvars, int i) { return Polynomial::variable(nvars, i); }

// Expands h -> f(point + h e_i) as a univariate polynomial in h using only
// polynomial products and sums, never poly.partial(). Returns the
// coefficient list by ascending power of h.
std::vector<Rational> shift_expansion(const Polynomial& f, int i,
                                      const std::vector<Rational>& point) {
  Polynomial shifted = Polynomial::constant(1, point[static_cast<size_t>(i - 1)]) +
                       Polynomial::variable(1, 1);
  Polynomial u = Polynomial::constant(1, Rational(0));
  for (const auto& [exps, c] : f.terms()) {
    Polynomial term = Polynomial::constant(1, c);
    for (size_t v = 0; v < exps.size(); ++v) {
      for (int e = 0; e < exps[v]; ++e) {
        term = term * (static_cast<int>(v) == i - 1 ? shifted
                                                    : Polynomial::constant(1, point[v]));
      }
    }
    u = u + term;
  }
  std::vector<Rational> coeffs;
  for (const auto& [exps, c] : u.terms()) {
    if (exps[0] >= static_cast<int>(coeffs.size())) coeffs.resize(static_cast<size_t>(exps[0]) + 1);
    coeffs[static_cast<size_t>(exps[0])] = c;
  }
  return coeffs;
}

// naive monomial-sum evaluation oracle (fresh powering per monomial)
Rational eval_naive(const Polynomial& f, const std::vector<Rational>& point) {
  Rational sum;
  for (const auto& [exps, c] : f.terms()) {
    Rational term = c;
    for (size_t v = 0; v < exps.size(); ++v) {
      for (int e = 0; e < exps[v]; ++e) term *= point[v];
    }
    sum += term;
  }
  return sum;
}

}  // namespace

TEST_CASE("partial derivative examples") {
  Polynomial f = x(2, 1) * x(2, 1);  // x1^2
  CHECK(f.partial(1) == x(2, 1) * Polynomial::constant(2, Rational(2)));
  CHECK(x(2, 1).partial(2).is_zero());
  CHECK_THROWS_AS(f.partial(3), extalg::DomainError);
}

TEST_CASE("increment law at a concrete point") {
  extalg::SplitMix64 g(301);
  std::vector<Rational> point{Rational(1), Rational(2)};
  Rational h(1, 3);
  for (int trial = 0; trial < 25; ++trial) {
    Polynomial f = extalg::rand_polynomial(g, 2, 3, 5);
    int i = g.range(1, 2);
    auto coeffs = shift_expansion(f, i, point);

    // (f(x + h e_i) - f(x))/h - f_i(x) is divisible by h exactly when the
    // linear coefficient of the expansion is the partial derivative at x.
    Rational linear = coeffs.size() > 1 ? coeffs[1] : Rational(0);
    CHECK(linear == f.partial(i).evaluate(point));

    // concrete divided difference at h = 1/3 agrees with the expansion
    std::vector<Rational> shifted_point = point;
    shifted_point[static_cast<size_t>(i - 1)] += h;
    Rational divided = (f.evaluate(shifted_point) - f.evaluate(point)) / h;
    Rational via_coeffs;
    Rational hk(1);
    for (size_t k = 1; k < coeffs.size(); ++k) {
      via_coeffs += coeffs[k] * hk;
      hk *= h;
    }
    CHECK(divided == via_coeffs);
  }
}

TEST_CASE("form wedge examples") {
  // (x1 dx2) ^ dx1 = -x1 dx1^dx2
  PolyForm a(2);
  a.add_term(Combination(2, {2}), x(2, 1));
  PolyForm dx1(2);
  dx1.add_term(Combination(2, {1}), Polynomial::constant(2, Rational(1)));

  PolyForm got = extalg::wedge(a, dx1);
  PolyForm expected(2);
  expected.add_term(Combination(2, {1, 2}), x(2, 1) * Polynomial::constant(2, Rational(-1)));
  CHECK(got == expected);

  // 0-forms multiply as polynomials
  PolyForm f = PolyForm::from_polynomial(x(2, 1) + x(2, 2));
  PolyForm gf = PolyForm::from_polynomial(x(2, 1));
  PolyForm prod = extalg::wedge(f, gf);
  PolyForm expected2 = PolyForm::from_polynomial((x(2, 1) + x(2, 2)) * x(2, 1));
  CHECK(prod == expected2);

  CHECK(extalg::wedge(dx1, dx1).is_zero());
}

TEST_CASE("exterior derivative examples") {
  PolyForm f = PolyForm::from_polynomial(x(2, 1) * x(2, 1));  // 0-form x1^2
  PolyForm df = extalg::exterior_derivative(f);
  PolyForm expected(2);
  expected.add_term(Combination(2, {1}), x(2, 1) * Polynomial::constant(2, Rational(2)));
  CHECK(df == expected);

  PolyForm a(2);
  a.add_term(Combination(2, {2}), x(2, 1));  // x1 dx2
  PolyForm da = extalg::exterior_derivative(a);
  PolyForm expected_da(2);
  expected_da.add_term(Combination(2, {1, 2}), Polynomial::constant(2, Rational(1)));
  CHECK(da == expected_da);

  PolyForm b(2);
  b.add_term(Combination(2, {1}), x(2, 2));  // x2 dx1
  PolyForm db = extalg::exterior_derivative(b);
  PolyForm expected_db(2);
  expected_db.add_term(Combination(2, {1, 2}), Polynomial::constant(2, Rational(-1)));
  CHECK(db == expected_db);

  // top grade maps to zero
  PolyForm top(2);
  top.add_term(Combination(2, {1, 2}), x(2, 1) * x(2, 2));
  CHECK(extalg::exterior_derivative(top).is_zero());
}

TEST_CASE("d squared vanishes and the graded Leibniz law holds") {
  extalg::SplitMix64 g(303);
  for (int trial = 0; trial < 60; ++trial) {
    int n = g.range(1, 4);
    int p = g.range(0, n);
    int q = g.range(0, n);
    PolyForm a = extalg::rand_form(g, n, p);
    PolyForm b = extalg::rand_form(g, n, q);

    CHECK(extalg::exterior_derivative(extalg::exterior_derivative(a)).is_zero());

    PolyForm lhs = extalg::exterior_derivative(extalg::wedge(a, b));
    PolyForm rhs = extalg::wedge(extalg::exterior_derivative(a), b);
    PolyForm cross = extalg::wedge(a, extalg::exterior_derivative(b));
    if (p % 2 == 1) {
      PolyForm negated(n);
      for (const auto& [index, f] : cross.terms()) {
        negated.add_term(index, f * Rational(-1));
      }
      cross = negated;
    }
    CHECK(lhs == rhs + cross);
  }
}

TEST_CASE("evaluation examples") {
  PolyForm a(2);
  a.add_term(Combination(2, {2}), x(2, 1));  // x1 dx2
  std::vector<Rational> pt{Rational(3), Rational(7)};
  extalg::GradedElement v = extalg::evaluate(a, pt);
  CHECK(v.part(1).coeff(Combination(2, {2})).str() == "3");

  PolyForm constant(2);
  constant.add_term(Combination(2, {1, 2}), Polynomial::constant(2, Rational(5)));
  extalg::GradedElement w = extalg::evaluate(constant, pt);
  CHECK(w.part(2).coeff(Combination(2, {1, 2})).str() == "5");

  CHECK_THROWS_AS(extalg::evaluate(a, std::vector<Rational>{Rational(1)}),
                  extalg::DimensionError);
}

TEST_CASE("evaluation agrees with the naive monomial oracle") {
  extalg::SplitMix64 g(304);
  for (int trial = 0; trial < 40; ++trial) {
    int n = g.range(1, 4);
    Polynomial f = extalg::rand_polynomial(g, n, 4, 6);
    std::vector<Rational> pt;
    for (int i = 0; i < n; ++i) pt.push_back(extalg::rand_rational(g, 4, 3));
    CHECK(f.evaluate(pt) == eval_naive(f, pt));
  }
}

TEST_CASE("pointwise evaluation respects the wedge") {
  extalg::SplitMix64 g(305);
  for (int trial = 0; trial < 40; ++trial) {
    int n = g.range(1, 4);
    PolyForm a = extalg::rand_form(g, n, g.range(0, n));
    PolyForm b = extalg::rand_form(g, n, g.range(0, n));
    std::vector<Rational> pt;
    for (int i = 0; i < n; ++i) pt.push_back(extalg::rand_rational(g, 3, 3));
    extalg::GradedElement lhs = extalg::evaluate(extalg::wedge(a, b), pt);
    extalg::GradedElement rhs = extalg::wedge(extalg::evaluate(a, pt), extalg::evaluate(b, pt));
    CHECK(lhs == rhs);
  }
}
