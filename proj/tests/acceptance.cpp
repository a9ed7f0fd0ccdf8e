// Acceptance suite. Each criterion prints exactly one PASS/FAIL line; the
// binary exits nonzero if any criterion fails. All checks are exact; the
// stated runtime budgets are enforced. Usage: acceptance <path-to-cli>.

#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "determinant.hpp"
#include "json_io.hpp"
#include "polyform.hpp"
#include "rng.hpp"
#include "selfcheck.hpp"
#include "tensor.hpp"

using namespace extalg;

namespace {

int g_failed = 0;

void report(const std::string& name, bool ok, const std::string& detail = "") {
  if (ok) {
    std::cout << "PASS: " << name << (detail.empty() ? "" : " (" + detail + ")") << "\n";
  } else {
    ++g_failed;
    std::cout << "FAIL: " << name << (detail.empty() ? "" : " (" + detail + ")") << "\n";
  }
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

// --- independent counting oracles (never the library's own binomial) ---

std::uint64_t oracle_binomial(int n, int m) {
  std::vector<std::uint64_t> row{1};
  for (int i = 1; i <= n; ++i) {
    std::vector<std::uint64_t> next(static_cast<size_t>(i) + 1, 1);
    for (int j = 1; j < i; ++j) {
      next[static_cast<size_t>(j)] =
          row[static_cast<size_t>(j - 1)] + row[static_cast<size_t>(j)];
    }
    row = std::move(next);
  }
  return m >= 0 && m <= n ? row[static_cast<size_t>(m)] : 0;
}

std::uint64_t oracle_falling(int n, int m) {
  std::uint64_t out = 1;
  for (int i = 0; i < m; ++i) out *= static_cast<std::uint64_t>(n - i);
  return out;
}

std::uint64_t oracle_power(std::uint64_t n, int m) {
  std::uint64_t out = 1;
  for (int i = 0; i < m; ++i) out *= n;
  return out;
}

// 1. Counting laws: enumeration sizes for all 0 <= m <= n <= 8, under 5 s.
void criterion_counting_laws() {
  auto start = std::chrono::steady_clock::now();
  bool ok = true;
  for (int n = 0; n <= 8 && ok; ++n) {
    for (int m = 0; m <= n && ok; ++m) {
      std::uint64_t combs = 0;
      for ([[maybe_unused]] const auto& w : CombinationRange(n, m)) ++combs;
      if (combs != oracle_binomial(n, m)) ok = false;

      std::uint64_t injs = 0;
      for ([[maybe_unused]] const auto& w : InjectionRange(n, m)) ++injs;
      if (injs != oracle_falling(n, m)) ok = false;

      if (n >= 1) {
        std::uint64_t places = 0;
        for ([[maybe_unused]] const auto& w : PlacementRange(n, m)) ++places;
        if (places != oracle_power(static_cast<std::uint64_t>(n), m)) ok = false;
      }
    }
  }
  double elapsed = seconds_since(start);
  report("counting laws (n <= 8)", ok && elapsed < 5.0,
         "C(n,m), n!/(n-m)!, n^m exact; " + std::to_string(elapsed) + " s");
}

// 2. Isomorphism law: injection <-> (combination, permutation) for n <= 6.
void criterion_isomorphism_law() {
  bool ok = true;
  for (int n = 0; n <= 6 && ok; ++n) {
    for (int m = 0; m <= n && ok; ++m) {
      std::map<std::vector<int>, std::uint64_t> fibers;
      for (const auto& w : InjectionRange(n, m)) {
        Injection j(n, w);
        auto [c, p] = decompose_injection(j);
        if (!(recompose_injection(c, p) == j)) ok = false;
        ++fibers[c.word];
      }
      std::uint64_t fact = oracle_falling(m, m);
      if (fibers.size() != oracle_binomial(n, m)) ok = false;
      for (const auto& [word, count] : fibers) {
        if (count != fact) ok = false;
      }
    }
  }
  report("isomorphism law (n <= 6)", ok, "round trip identical, fibers of size m!");
}

// 3. Determinant oracle equivalence on >= 200 random integer matrices.
void criterion_det_equivalence() {
  auto start = std::chrono::steady_clock::now();
  SplitMix64 g(0xDE7E0001ULL);
  bool ok = true;
  for (int trial = 0; trial < 200 && ok; ++trial) {
    int n = g.range(1, 6);
    Matrix a = rand_matrix(g, n, n, 4);
    Rational leibniz = det_leibniz(a);
    for (int m = 1; m <= n && ok; ++m) {
      for (const auto& w : CombinationRange(n, m)) {
        if (!(det_laplace(a, Combination(n, w)) == leibniz)) {
          ok = false;
          break;
        }
      }
    }
    Matrix top = exterior_power_map(a, n);
    if (!(top.at(0, 0) == leibniz)) ok = false;
  }
  double elapsed = seconds_since(start);
  report("determinant oracle equivalence (200 matrices, n <= 6)", ok && elapsed < 30.0,
         "leibniz = laplace (every rowset) = top compound; " + std::to_string(elapsed) + " s");
}

// 4. Functoriality of the compound on >= 100 composable pairs, sizes <= 5.
void criterion_functoriality() {
  SplitMix64 g(0xDE7E0002ULL);
  bool ok = true;
  for (int trial = 0; trial < 100 && ok; ++trial) {
    int r = g.range(1, 5), k = g.range(1, 5), c = g.range(1, 5);
    Matrix a = rand_matrix(g, r, k, 4);
    Matrix b = rand_matrix(g, k, c, 4);
    Matrix ab = a * b;
    for (int m = 0; m <= std::min({r, k, c}) && ok; ++m) {
      if (!(exterior_power_map(ab, m) == exterior_power_map(a, m) * exterior_power_map(b, m))) {
        ok = false;
      }
    }
  }
  for (int n = 1; n <= 5 && ok; ++n) {
    for (int m = 0; m <= n && ok; ++m) {
      if (!(exterior_power_map(Matrix::identity(n), m) ==
            Matrix::identity(static_cast<int>(oracle_binomial(n, m))))) {
        ok = false;
      }
    }
  }
  report("functoriality of the exterior power (100 pairs, all m)", ok,
         "compound of product = product of compounds, identity preserved");
}

// 5. Cauchy-Binet witness on >= 100 random pairs with r <= k <= 6.
void criterion_cauchy_binet() {
  SplitMix64 g(0xDE7E0003ULL);
  bool ok = true;
  for (int trial = 0; trial < 100 && ok; ++trial) {
    int r = g.range(1, 5);
    int k = g.range(r, 6);
    Matrix a = rand_matrix(g, r, k, 4);
    Matrix b = rand_matrix(g, k, r, 4);
    if (!(cauchy_binet(a, b) == det_leibniz(a * b))) ok = false;
  }
  report("cauchy-binet witness (100 pairs, r <= k <= 6)", ok, "sum of minor products = det(AB)");
}

// 6. Alternation projector laws for n <= 4, exact.
void criterion_alternation() {
  SplitMix64 g(0xDE7E0004ULL);
  bool ok = true;
  for (int trial = 0; trial < 100 && ok; ++trial) {
    int n = g.range(1, 4);
    int m = g.range(0, 3);
    Tensor t = rand_tensor(g, n, m, 4);
    Tensor once = alt(t);
    if (!(alt(once) == once)) ok = false;
    if (!is_alternating(once)) ok = false;
  }
  for (int n = 1; n <= 4 && ok; ++n) {
    for (int m = 0; m <= n && ok; ++m) {
      for (const auto& w : CombinationRange(n, m)) {
        Multivector basis = Multivector::basis(n, Combination(n, w));
        if (!(project_multivector(embed_multivector(basis)) == basis)) ok = false;
      }
    }
  }
  for (int trial = 0; trial < 100 && ok; ++trial) {
    int n = g.range(1, 4);
    int p = g.range(0, 2), q = g.range(0, 2);
    Multivector u = rand_multivector(g, n, p, 2, 4);
    Multivector v = rand_multivector(g, n, q, 2, 4);
    Multivector uv = wedge(u, v);
    if (p + q <= n) {
      if (!(project_multivector(embed_multivector(uv)) == uv)) ok = false;
      Rational constant = factorial(p + q) * inverse_factorial(p) * inverse_factorial(q);
      Tensor lhs = embed_multivector(uv);
      Tensor rhs = alt(tensor_product(embed_multivector(u), embed_multivector(v))) * constant;
      if (!(lhs == rhs)) ok = false;
    }
  }
  report("alternation projector (n <= 4)", ok,
         "alt idempotent, image alternating, embed/project round trip, wedge constant");
}

// 7. Grassmann laws on >= 200 random multivectors, n <= 5.
void criterion_grassmann_laws() {
  SplitMix64 g(0xDE7E0005ULL);
  bool ok = true;
  for (int trial = 0; trial < 200 && ok; ++trial) {
    int n = g.range(1, 5);
    int p = g.range(0, std::min(3, n));
    int q = g.range(0, std::min(3, n));
    Multivector u = rand_multivector(g, n, p);
    Multivector v = rand_multivector(g, n, q);
    Multivector w = rand_multivector(g, n, g.range(0, std::min(3, n)));
    Rational sign((p * q) % 2 == 0 ? 1 : -1);
    if (!(wedge(u, v) == wedge(v, u) * sign)) ok = false;
    if (!(wedge(wedge(u, v), w) == wedge(u, wedge(v, w)))) ok = false;

    GradedElement gu = rand_graded(g, n, 2);
    GradedElement gv = rand_graded(g, n, 2);
    GradedElement gw = rand_graded(g, n, 2);
    if (!(clutch(GradedElement::scalar(n, Rational(1)))(gw) == gw)) ok = false;
    if (!(clutch(gu)(clutch(gv)(gw)) == clutch(wedge(gu, gv))(gw))) ok = false;
  }
  report("grassmann laws (200 multivectors, n <= 5)", ok,
         "anticommutativity, associativity, unit, clutch composition");
}

// 8. Pairing laws: Gram identity (n <= 5), adjointness, iterated contraction.
void criterion_pairing_laws() {
  bool ok = true;
  for (int n = 1; n <= 5 && ok; ++n) {
    for (int m = 0; m <= n && ok; ++m) {
      for (const auto& wi : CombinationRange(n, m)) {
        Multivector ei = Multivector::basis(n, Combination(n, wi));
        for (const auto& wj : CombinationRange(n, m)) {
          Multivector ej = Multivector::basis(n, Combination(n, wj));
          Rational expected(wi == wj ? 1 : 0);
          if (!(pair(dual(ei), ej) == expected)) ok = false;
        }
      }
    }
  }
  SplitMix64 g(0xDE7E0006ULL);
  for (int trial = 0; trial < 100 && ok; ++trial) {
    int r = g.range(1, 4), c = g.range(1, 4);
    int m = g.range(0, std::min(r, c));
    Matrix a = rand_matrix(g, r, c, 4);
    Multivector v = rand_multivector(g, c, m);
    Multivector w = rand_multivector(g, r, m);
    if (!(pair(dual(w), apply_map(a, v)) == pair(dual(apply_map(a.transpose(), w)), v))) {
      ok = false;
    }
  }
  for (int n = 1; n <= 5 && ok; ++n) {
    for (int m = 1; m <= n && ok; ++m) {
      for (const auto& wi : CombinationRange(n, m)) {
        for (const auto& wv : CombinationRange(n, m)) {
          Multivector v = Multivector::basis(n, Combination(n, wv));
          Multivector current = v;
          for (int k = 0; k < m; ++k) {
            Multivector unit = Multivector::basis(n, Combination(n, {wi[static_cast<size_t>(k)]}));
            current = contract(dual(unit), current);
          }
          Rational direct = pair(dual(Multivector::basis(n, Combination(n, wi))), v);
          if (!(current.coeff(Combination(n, {})) == direct)) ok = false;
        }
      }
    }
  }
  report("pairing laws (n <= 5)", ok,
         "gram identity, compound adjointness, iterated contraction = pairing");
}

// 9. Differential laws: d^2 = 0 and graded Leibniz on >= 200 forms; the
// exact increment law at >= 50 random rational points; under 30 s.
void criterion_differential_laws() {
  auto start = std::chrono::steady_clock::now();
  SplitMix64 g(0xDE7E0007ULL);
  bool ok = true;
  for (int trial = 0; trial < 200 && ok; ++trial) {
    int n = g.range(1, 4);
    int p = g.range(0, n);
    int q = g.range(0, n);
    PolyForm a = rand_form(g, n, p, 2, 3);
    PolyForm b = rand_form(g, n, q, 2, 3);
    if (!exterior_derivative(exterior_derivative(a)).is_zero()) ok = false;

    PolyForm lhs = exterior_derivative(wedge(a, b));
    PolyForm rhs = wedge(exterior_derivative(a), b);
    PolyForm cross = wedge(a, exterior_derivative(b));
    if (p % 2 == 1) {
      PolyForm negated(n);
      for (const auto& [index, f] : cross.terms()) negated.add_term(index, f * Rational(-1));
      cross = negated;
    }
    if (!(lhs == rhs + cross)) ok = false;
  }

  // increment law: coefficient of h in f(x + h e_i), via an expansion that
  // never calls partial(), must equal partial(f, i) at x
  for (int trial = 0; trial < 50 && ok; ++trial) {
    int n = g.range(1, 4);
    Polynomial f = rand_polynomial(g, n, 3, 5);
    int i = g.range(1, n);
    std::vector<Rational> point;
    for (int v = 0; v < n; ++v) point.push_back(rand_rational(g, 4, 4));

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
    Rational linear;
    Rational constant_term;
    for (const auto& [exps, c] : u.terms()) {
      if (exps[0] == 1) linear = c;
      if (exps[0] == 0) constant_term = c;
    }
    if (!(linear == f.partial(i).evaluate(point))) ok = false;
    if (!(constant_term == f.evaluate(point))) ok = false;

    Rational h = rand_rational(g, 3, 3);
    if (h.is_zero()) h = Rational(1, 3);
    std::vector<Rational> moved = point;
    moved[static_cast<size_t>(i - 1)] += h;
    std::vector<Rational> at_h{h};
    if (!(u.evaluate(at_h) == f.evaluate(moved))) ok = false;
  }
  double elapsed = seconds_since(start);
  report("differential laws (200 forms, 50 increment points)", ok && elapsed < 30.0,
         "d^2 = 0, graded Leibniz, exact divided-difference law; " + std::to_string(elapsed) +
             " s");
}

// 10. CLI determinism: identical check invocations yield identical bytes.
void criterion_cli_determinism(const char* cli_path) {
  auto run_once = [&](std::string& out) -> int {
    std::string command =
        std::string(cli_path) + " check --suite all --n 3 --trials 10 --seed 1 2>/dev/null";
    FILE* pipe = popen(command.c_str(), "r");
    if (!pipe) return -1;
    char buffer[4096];
    size_t got;
    while ((got = fread(buffer, 1, sizeof buffer, pipe)) > 0) out.append(buffer, got);
    int status = pclose(pipe);
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  };
  std::string first, second;
  int rc1 = run_once(first);
  int rc2 = run_once(second);
  bool ok = rc1 == 0 && rc2 == 0 && !first.empty() && first == second &&
            first.find("result: PASS") != std::string::npos;
  report("cli determinism (check --suite all --n 3 --trials 10 --seed 1)", ok,
         "byte-identical reports, exit 0");
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << "usage: acceptance <path-to-cli>\n";
    return 99;
  }
  criterion_counting_laws();
  criterion_isomorphism_law();
  criterion_det_equivalence();
  criterion_functoriality();
  criterion_cauchy_binet();
  criterion_alternation();
  criterion_grassmann_laws();
  criterion_pairing_laws();
  criterion_differential_laws();
  criterion_cli_determinism(argv[1]);

  if (g_failed == 0) {
    std::cout << "acceptance: all criteria passed\n";
    return 0;
  }
  std::cout << "acceptance: " << g_failed << " criterion(s) failed\n";
  return 1;
}
