#include "selfcheck.hpp"

#include <functional>
#include <optional>
#include <sstream>
#include <vector>

#include "determinant.hpp"
#include "json_io.hpp"
#include "rng.hpp"
#include "tensor.hpp"

namespace extalg {

namespace {

std::string js(const Matrix& m) { return dump_json(matrix_to_json(m)); }
std::string js(const Multivector& v) { return dump_json(graded_to_json(GradedElement(v))); }
std::string js(const GradedElement& v) { return dump_json(graded_to_json(v)); }
std::string js(const Tensor& t) { return dump_json(tensor_to_json(t)); }
std::string js(const PolyForm& f) { return dump_json(form_to_json(f)); }

struct Property {
  const char* name;
  // Returns a counterexample description, or nullopt when the trial passes.
  std::function<std::optional<std::string>(SplitMix64&, int)> run;
};

// --- functoriality -----------------------------------------------------------

std::optional<std::string> prop_compound_identity(SplitMix64& g, int n) {
  int k = g.range(1, n);
  int m = g.range(0, k);
  Matrix lhs = exterior_power_map(Matrix::identity(k), m);
  Matrix expected = Matrix::identity(static_cast<int>(binomial(k, m)));
  if (lhs == expected) return std::nullopt;
  std::ostringstream os;
  os << "  k=" << k << " m=" << m << "\n  got = " << js(lhs);
  return os.str();
}

std::optional<std::string> prop_compound_composition(SplitMix64& g, int n) {
  int r = g.range(1, n), k = g.range(1, n), c = g.range(1, n);
  Matrix a = rand_matrix(g, r, k);
  Matrix b = rand_matrix(g, k, c);
  int m = g.range(0, std::min({r, k, c}));
  Matrix lhs = exterior_power_map(a * b, m);
  Matrix rhs = exterior_power_map(a, m) * exterior_power_map(b, m);
  if (lhs == rhs) return std::nullopt;
  std::ostringstream os;
  os << "  m=" << m << "\n  A = " << js(a) << "\n  B = " << js(b);
  return os.str();
}

std::optional<std::string> prop_compound_transpose(SplitMix64& g, int n) {
  int r = g.range(1, n), c = g.range(1, n);
  Matrix a = rand_matrix(g, r, c);
  int m = g.range(0, std::min(r, c));
  Matrix lhs = exterior_power_map(a.transpose(), m);
  Matrix rhs = exterior_power_map(a, m).transpose();
  if (lhs == rhs) return std::nullopt;
  std::ostringstream os;
  os << "  m=" << m << "\n  A = " << js(a);
  return os.str();
}

std::optional<std::string> prop_top_grade_det(SplitMix64& g, int n) {
  int k = g.range(1, n);
  Matrix a = rand_matrix(g, k, k);
  Matrix top = exterior_power_map(a, k);
  if (top.rows() == 1 && top.cols() == 1 && top.at(0, 0) == det_leibniz(a)) return std::nullopt;
  std::ostringstream os;
  os << "  A = " << js(a);
  return os.str();
}

// --- wedge -------------------------------------------------------------------

std::optional<std::string> prop_anticommutativity(SplitMix64& g, int n) {
  int p = g.range(0, std::min(3, n));
  int q = g.range(0, std::min(3, n));
  Multivector u = rand_multivector(g, n, p);
  Multivector v = rand_multivector(g, n, q);
  Rational sign((p * q) % 2 == 0 ? 1 : -1);
  if (wedge(u, v) == wedge(v, u) * sign) return std::nullopt;
  std::ostringstream os;
  os << "  u = " << js(u) << "\n  v = " << js(v);
  return os.str();
}

std::optional<std::string> prop_associativity(SplitMix64& g, int n) {
  Multivector u = rand_multivector(g, n, g.range(0, std::min(2, n)));
  Multivector v = rand_multivector(g, n, g.range(0, std::min(2, n)));
  Multivector w = rand_multivector(g, n, g.range(0, std::min(2, n)));
  if (wedge(wedge(u, v), w) == wedge(u, wedge(v, w))) return std::nullopt;
  std::ostringstream os;
  os << "  u = " << js(u) << "\n  v = " << js(v) << "\n  w = " << js(w);
  return os.str();
}

std::optional<std::string> prop_unit_law(SplitMix64& g, int n) {
  GradedElement w = rand_graded(g, n);
  if (clutch(GradedElement::scalar(n, Rational(1)))(w) == w) return std::nullopt;
  std::ostringstream os;
  os << "  w = " << js(w);
  return os.str();
}

std::optional<std::string> prop_clutch_composition(SplitMix64& g, int n) {
  GradedElement u = rand_graded(g, n, 2);
  GradedElement v = rand_graded(g, n, 2);
  GradedElement w = rand_graded(g, n, 2);
  if (clutch(u)(clutch(v)(w)) == clutch(wedge(u, v))(w)) return std::nullopt;
  std::ostringstream os;
  os << "  u = " << js(u) << "\n  v = " << js(v) << "\n  w = " << js(w);
  return os.str();
}

// --- alt ---------------------------------------------------------------------

std::optional<std::string> prop_alt_projector(SplitMix64& g, int n) {
  int dim = g.range(1, std::min(3, n));
  Tensor t = rand_tensor(g, dim, g.range(0, 3));
  Tensor once = alt(t);
  if (alt(once) == once && is_alternating(once)) return std::nullopt;
  std::ostringstream os;
  os << "  t = " << js(t);
  return os.str();
}

std::optional<std::string> prop_alt_linearity(SplitMix64& g, int n) {
  int dim = g.range(1, std::min(3, n));
  int order = g.range(0, 3);
  Tensor s = rand_tensor(g, dim, order);
  Tensor t = rand_tensor(g, dim, order);
  Rational a = rand_rational(g);
  Rational b = rand_rational(g);
  if (alt(s * a + t * b) == alt(s) * a + alt(t) * b) return std::nullopt;
  std::ostringstream os;
  os << "  s = " << js(s) << "\n  t = " << js(t) << "\n  a = " << a.str() << " b = " << b.str();
  return os.str();
}

std::optional<std::string> prop_embed_project(SplitMix64& g, int n) {
  int m = g.range(0, n);
  Multivector v = rand_multivector(g, n, m);
  if (project_multivector(embed_multivector(v)) == v) return std::nullopt;
  std::ostringstream os;
  os << "  v = " << js(v);
  return os.str();
}

std::optional<std::string> prop_embed_wedge_constant(SplitMix64& g, int n) {
  int p = g.range(0, std::min(2, n));
  int q = g.range(0, std::min(2, n));
  if (p + q > n) {
    p = 0;
    q = 0;
  }
  Multivector u = rand_multivector(g, n, p, 2);
  Multivector v = rand_multivector(g, n, q, 2);
  Rational constant = factorial(p + q) * inverse_factorial(p) * inverse_factorial(q);
  Tensor lhs = embed_multivector(wedge(u, v));
  Tensor rhs = alt(tensor_product(embed_multivector(u), embed_multivector(v))) * constant;
  if (lhs == rhs) return std::nullopt;
  std::ostringstream os;
  os << "  u = " << js(u) << "\n  v = " << js(v);
  return os.str();
}

// --- laplace -----------------------------------------------------------------

std::optional<std::string> prop_laplace_agreement(SplitMix64& g, int n) {
  int k = g.range(1, n);
  Matrix a = rand_matrix(g, k, k);
  int m = g.range(1, k);
  Combination rowset = unrank_combination(k, m, g.next() % binomial(k, m));
  Rational via_laplace = det_laplace(a, rowset);
  Rational via_leibniz = det_leibniz(a);
  if (via_laplace == via_leibniz) return std::nullopt;
  std::ostringstream os;
  os << "  A = " << js(a) << "\n  rowset size " << m << "\n  laplace = " << via_laplace.str()
     << " leibniz = " << via_leibniz.str();
  return os.str();
}

std::optional<std::string> prop_row_swap_negates(SplitMix64& g, int n) {
  int k = g.range(2, n);
  Matrix a = rand_matrix(g, k, k);
  int i = g.range(0, k - 1);
  int j = g.range(0, k - 2);
  if (j >= i) ++j;
  Matrix b = a;
  for (int c = 0; c < k; ++c) std::swap(b.at(i, c), b.at(j, c));
  if (det_leibniz(b) == -det_leibniz(a)) return std::nullopt;
  std::ostringstream os;
  os << "  A = " << js(a) << "\n  swapped rows " << (i + 1) << "," << (j + 1);
  return os.str();
}

std::optional<std::string> prop_equal_rows_zero(SplitMix64& g, int n) {
  int k = g.range(2, n);
  Matrix a = rand_matrix(g, k, k);
  int i = g.range(0, k - 1);
  int j = g.range(0, k - 2);
  if (j >= i) ++j;
  for (int c = 0; c < k; ++c) a.at(j, c) = a.at(i, c);
  if (det_leibniz(a).is_zero()) return std::nullopt;
  std::ostringstream os;
  os << "  A = " << js(a);
  return os.str();
}

std::optional<std::string> prop_transpose_invariance(SplitMix64& g, int n) {
  int k = g.range(1, n);
  Matrix a = rand_matrix(g, k, k);
  if (det_leibniz(a) == det_leibniz(a.transpose())) return std::nullopt;
  std::ostringstream os;
  os << "  A = " << js(a);
  return os.str();
}

// --- binet -------------------------------------------------------------------

std::optional<std::string> prop_binet_product(SplitMix64& g, int n) {
  int r = g.range(1, n);
  int k = g.range(r, n);
  Matrix a = rand_matrix(g, r, k);
  Matrix b = rand_matrix(g, k, r);
  if (cauchy_binet(a, b) == det_leibniz(a * b)) return std::nullopt;
  std::ostringstream os;
  os << "  A = " << js(a) << "\n  B = " << js(b);
  return os.str();
}

std::optional<std::string> prop_binet_wide_zero(SplitMix64& g, int n) {
  int r = g.range(2, n);
  int k = g.range(1, r - 1);
  Matrix a = rand_matrix(g, r, k);
  Matrix b = rand_matrix(g, k, r);
  if (cauchy_binet(a, b).is_zero()) return std::nullopt;
  std::ostringstream os;
  os << "  A = " << js(a) << "\n  B = " << js(b);
  return os.str();
}

// --- dforms --------------------------------------------------------------------

std::optional<std::string> prop_d_squared_zero(SplitMix64& g, int n) {
  int vars = g.range(1, std::min(4, n));
  PolyForm a = rand_form(g, vars, g.range(0, vars));
  if (exterior_derivative(exterior_derivative(a)).is_zero()) return std::nullopt;
  std::ostringstream os;
  os << "  a = " << js(a);
  return os.str();
}

std::optional<std::string> prop_graded_leibniz(SplitMix64& g, int n) {
  int vars = g.range(1, std::min(4, n));
  int p = g.range(0, vars);
  int q = g.range(0, vars);
  PolyForm a = rand_form(g, vars, p);
  PolyForm b = rand_form(g, vars, q);
  PolyForm lhs = exterior_derivative(wedge(a, b));
  PolyForm rhs = wedge(exterior_derivative(a), b);
  PolyForm crossed = wedge(a, exterior_derivative(b));
  if (p % 2 == 1) {
    // negate the crossed term
    PolyForm negated(vars);
    for (const auto& [index, f] : crossed.terms()) negated.add_term(index, f * Rational(-1));
    crossed = negated;
  }
  if (lhs == rhs + crossed) return std::nullopt;
  std::ostringstream os;
  os << "  a = " << js(a) << "\n  b = " << js(b);
  return os.str();
}

std::optional<std::string> prop_eval_wedge(SplitMix64& g, int n) {
  int vars = g.range(1, std::min(4, n));
  PolyForm a = rand_form(g, vars, g.range(0, vars));
  PolyForm b = rand_form(g, vars, g.range(0, vars));
  std::vector<Rational> point;
  point.reserve(static_cast<size_t>(vars));
  for (int i = 0; i < vars; ++i) point.push_back(rand_rational(g, 3, 3));
  GradedElement lhs = evaluate(wedge(a, b), point);
  GradedElement rhs = wedge(evaluate(a, point), evaluate(b, point));
  if (lhs == rhs) return std::nullopt;
  std::ostringstream os;
  os << "  a = " << js(a) << "\n  b = " << js(b);
  return os.str();
}

std::optional<std::string> prop_increment_law(SplitMix64& g, int n) {
  int vars = g.range(1, std::min(4, n));
  Polynomial f = rand_polynomial(g, vars, 3, 4);
  int i = g.range(1, vars);
  std::vector<Rational> point;
  point.reserve(static_cast<size_t>(vars));
  for (int v = 0; v < vars; ++v) point.push_back(rand_rational(g, 3, 3));
  Rational h = rand_rational(g, 3, 3);
  if (h.is_zero()) h = Rational(1, 2);

  // u(h) = f(point with x_i -> x_i + h), as a univariate polynomial in h.
  Polynomial shifted = Polynomial::constant(1, point[static_cast<size_t>(i - 1)]) +
                       Polynomial::variable(1, 1);
  Polynomial u = Polynomial::constant(1, Rational(0));
  for (const auto& [exps, c] : f.terms()) {
    Polynomial term = Polynomial::constant(1, c);
    for (size_t v = 0; v < exps.size(); ++v) {
      for (int e = 0; e < exps[v]; ++e) {
        if (static_cast<int>(v) == i - 1) {
          term = term * shifted;
        } else {
          term = term * Polynomial::constant(1, point[v]);
        }
      }
    }
    u = u + term;
  }
  // (u(h) - u(0))/h - f_i(point) is divisible by h exactly when the
  // coefficient of h^1 in u equals the partial derivative at the point.
  Rational linear_coeff;
  for (const auto& [exps, c] : u.terms()) {
    if (exps[0] == 1) linear_coeff = c;
  }
  Rational derivative = f.partial(i).evaluate(point);
  // concrete cross-check of the expansion against a direct divided difference
  std::vector<Rational> shifted_point = point;
  shifted_point[static_cast<size_t>(i - 1)] += h;
  std::vector<Rational> at_h{h};
  bool expansion_ok = u.evaluate(at_h) == f.evaluate(shifted_point);
  if (linear_coeff == derivative && expansion_ok) return std::nullopt;
  std::ostringstream os;
  os << "  f = " << js(PolyForm::from_polynomial(f)) << "\n  i = " << i << " h = " << h.str();
  return os.str();
}

// --- suite assembly -----------------------------------------------------------

struct Suite {
  const char* name;
  std::vector<Property> properties;
};

const std::vector<Suite>& all_suites() {
  static const std::vector<Suite> suites{
      {"functoriality",
       {{"compound_identity", prop_compound_identity},
        {"compound_composition", prop_compound_composition},
        {"compound_transpose", prop_compound_transpose},
        {"top_grade_det", prop_top_grade_det}}},
      {"wedge",
       {{"anticommutativity", prop_anticommutativity},
        {"associativity", prop_associativity},
        {"unit_law", prop_unit_law},
        {"clutch_composition", prop_clutch_composition}}},
      {"alt",
       {{"projector", prop_alt_projector},
        {"linearity", prop_alt_linearity},
        {"embed_project", prop_embed_project},
        {"embed_wedge_constant", prop_embed_wedge_constant}}},
      {"laplace",
       {{"laplace_agreement", prop_laplace_agreement},
        {"row_swap_negates", prop_row_swap_negates},
        {"equal_rows_zero", prop_equal_rows_zero},
        {"transpose_invariance", prop_transpose_invariance}}},
      {"binet",
       {{"binet_product", prop_binet_product},
        {"binet_wide_zero", prop_binet_wide_zero}}},
      {"dforms",
       {{"d_squared_zero", prop_d_squared_zero},
        {"graded_leibniz", prop_graded_leibniz},
        {"eval_wedge", prop_eval_wedge},
        {"increment_law", prop_increment_law}}},
  };
  return suites;
}

void run_suite(const Suite& suite, int n, long long trials, std::uint64_t seed, bool labelled,
               std::string& report, bool& passed) {
  if (labelled) report += "[" + std::string(suite.name) + "]\n";
  for (const auto& property : suite.properties) {
    SplitMix64 g(seed);
    long long ok = 0;
    std::optional<std::string> failure;
    long long failed_at = 0;
    for (long long t = 1; t <= trials; ++t) {
      failure = property.run(g, n);
      if (failure) {
        failed_at = t;
        break;
      }
      ++ok;
    }
    report += std::string(property.name) + ": " + std::to_string(ok) + "/" + std::to_string(trials);
    if (failure) {
      passed = false;
      report += " FAIL at trial " + std::to_string(failed_at) + "\n" + *failure + "\n";
    } else {
      report += "\n";
    }
  }
}

}  // namespace

CheckResult run_check(std::string_view suite, int n, long long trials, std::uint64_t seed) {
  if (trials < 1) throw DomainError("check: trials must be at least 1");
  if (n < 2 || n > 8) throw DomainError("check: n must be in [2, 8]");

  CheckResult result;
  std::ostringstream head;
  head << "check suite=" << suite << " n=" << n << " trials=" << trials << " seed=" << seed
       << "\n";
  result.report = head.str();

  if (suite == "all") {
    for (const auto& s : all_suites()) {
      run_suite(s, n, trials, seed, /*labelled=*/true, result.report, result.passed);
    }
  } else {
    const Suite* found = nullptr;
    for (const auto& s : all_suites()) {
      if (suite == s.name) found = &s;
    }
    if (!found) throw DomainError("check: unknown suite");
    run_suite(*found, n, trials, seed, /*labelled=*/false, result.report, result.passed);
  }
  result.report += std::string("result: ") + (result.passed ? "PASS" : "FAIL") + "\n";
  return result;
}

}  // namespace extalg
