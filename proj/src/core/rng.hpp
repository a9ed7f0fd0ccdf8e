#pragma once

#include <cstdint>

#include "error.hpp"
#include "matrix.hpp"
#include "multivector.hpp"
#include "polyform.hpp"
#include "rational.hpp"
#include "tensor.hpp"

namespace extalg {

// SplitMix64: the named 64-bit mixing generator behind every seeded check.
// state += 0x9E3779B97F4A7C15; z = state; z ^= z >> 30; z *= 0xBF58476D1CE4E5B9;
// z ^= z >> 27; z *= 0x94D049BB133111EB; z ^= z >> 31. Identical seeds give
// identical streams on every platform, so check reports are diff-able.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    state_ += 0x9E3779B97F4A7C15ULL;
    std::uint64_t z = state_;
    z ^= z >> 30;
    z *= 0xBF58476D1CE4E5B9ULL;
    z ^= z >> 27;
    z *= 0x94D049BB133111EBULL;
    z ^= z >> 31;
    return z;
  }

  // Uniform-ish value in [lo, hi] by modulo reduction (documented; bias is
  // irrelevant for reproducible property sampling).
  int range(int lo, int hi) {
    if (hi < lo) throw DomainError("rng: empty range");
    std::uint64_t span = static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo) + 1;
    return lo + static_cast<int>(next() % span);
  }

 private:
  std::uint64_t state_;
};

// Seeded sample builders shared by the check suites and the tests.

inline Rational rand_rational(SplitMix64& g, int num_bound = 9, int den_bound = 5) {
  return Rational(g.range(-num_bound, num_bound), g.range(1, den_bound));
}

inline Matrix rand_matrix(SplitMix64& g, int rows, int cols, int bound = 5) {
  Matrix m(rows, cols);
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) {
      m.at(i, j) = Rational(g.range(-bound, bound));
    }
  }
  return m;
}

inline Multivector rand_multivector(SplitMix64& g, int n, int grade, int terms = 3, int bound = 5) {
  Multivector out(n, grade);
  if (grade > n) return out;
  std::uint64_t total = binomial(n, grade);
  for (int t = 0; t < terms; ++t) {
    std::uint64_t rank = g.next() % total;
    out.add_term(unrank_combination(n, grade, rank), Rational(g.range(-bound, bound)));
  }
  return out;
}

inline GradedElement rand_graded(SplitMix64& g, int n, int parts = 3, int bound = 5) {
  GradedElement out(n);
  for (int t = 0; t < parts; ++t) {
    out.add_part(rand_multivector(g, n, g.range(0, n), 2, bound));
  }
  return out;
}

inline Tensor rand_tensor(SplitMix64& g, int n, int order, int bound = 5) {
  Tensor t(n, order);
  for (auto& c : t.components()) c = Rational(g.range(-bound, bound));
  return t;
}

inline Polynomial rand_polynomial(SplitMix64& g, int nvars, int max_degree = 3, int terms = 4,
                                  int bound = 5) {
  Polynomial p(nvars);
  for (int t = 0; t < terms; ++t) {
    std::vector<int> exps(static_cast<size_t>(nvars), 0);
    int budget = g.range(0, max_degree);
    for (int d = 0; d < budget; ++d) {
      ++exps[static_cast<size_t>(g.range(0, nvars - 1))];
    }
    p.add_term(std::move(exps), Rational(g.range(-bound, bound)));
  }
  return p;
}

inline PolyForm rand_form(SplitMix64& g, int nvars, int grade, int terms = 2, int max_degree = 3) {
  PolyForm out(nvars);
  if (grade > nvars) return out;
  std::uint64_t total = binomial(nvars, grade);
  for (int t = 0; t < terms; ++t) {
    std::uint64_t rank = g.next() % total;
    out.add_term(unrank_combination(nvars, grade, rank), rand_polynomial(g, nvars, max_degree));
  }
  return out;
}

}  // namespace extalg
