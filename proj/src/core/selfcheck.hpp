#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace extalg {

// Seeded property-suite runner behind `check`. Suites:
//
//   functoriality  compound-matrix identity/composition/transpose/top-grade
//   wedge          graded anticommutativity, associativity, unit, clutching
//   alt            alternation projector, embedding round trip, wedge constant
//   laplace        generalized Laplace vs Leibniz, row alternation
//   binet          Cauchy-Binet sum vs determinant of the product
//   dforms         d of d = 0, graded Leibniz, pointwise evaluation, increments
//   all            the six above in this order, each reseeded with the seed
//
// The report is byte-deterministic for identical (suite, n, trials, seed).
// On a violation the report names the counterexample inputs verbatim.
struct CheckResult {
  bool passed = true;
  std::string report;
};

CheckResult run_check(std::string_view suite, int n, long long trials, std::uint64_t seed);

}  // namespace extalg
