#include "polyform.hpp"

#include <algorithm>
#include <numeric>

namespace extalg {

bool GradedLexLess::operator()(const std::vector<int>& a, const std::vector<int>& b) const {
  int da = std::accumulate(a.begin(), a.end(), 0);
  int db = std::accumulate(b.begin(), b.end(), 0);
  if (da != db) return da < db;
  return a < b;
}

Polynomial::Polynomial(int nvars) : nvars_(nvars) {
  if (nvars < 1) throw DomainError("polynomial: need at least one variable");
}

Polynomial Polynomial::constant(int nvars, Rational value) {
  Polynomial p(nvars);
  p.add_term(std::vector<int>(static_cast<size_t>(nvars), 0), value);
  return p;
}

Polynomial Polynomial::variable(int nvars, int i) {
  Polynomial p(nvars);
  std::vector<int> exps(static_cast<size_t>(nvars), 0);
  if (i < 1 || i > nvars) throw DomainError("polynomial: variable index out of range");
  exps[static_cast<size_t>(i - 1)] = 1;
  p.add_term(std::move(exps), Rational(1));
  return p;
}

Polynomial Polynomial::monomial(int nvars, std::vector<int> exps, Rational coeff) {
  Polynomial p(nvars);
  p.add_term(std::move(exps), coeff);
  return p;
}

void Polynomial::add_term(std::vector<int> exps, const Rational& c) {
  if (exps.size() != static_cast<size_t>(nvars_)) {
    throw DimensionError("polynomial term: exponent word length mismatch");
  }
  for (int e : exps) {
    if (e < 0) throw DomainError("polynomial term: negative exponent");
  }
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(std::move(exps), c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  if (nvars_ != o.nvars_) throw DimensionError("polynomial sum: variable count mismatch");
  Polynomial out = *this;
  for (const auto& [exps, c] : o.terms_) out.add_term(exps, c);
  return out;
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + o * Rational(-1); }

Polynomial Polynomial::operator*(const Polynomial& o) const {
  if (nvars_ != o.nvars_) throw DimensionError("polynomial product: variable count mismatch");
  Polynomial out(nvars_);
  for (const auto& [ea, ca] : terms_) {
    for (const auto& [eb, cb] : o.terms_) {
      std::vector<int> exps(ea.size());
      for (size_t k = 0; k < exps.size(); ++k) exps[k] = ea[k] + eb[k];
      out.add_term(std::move(exps), ca * cb);
    }
  }
  return out;
}

Polynomial Polynomial::operator*(const Rational& s) const {
  Polynomial out(nvars_);
  if (s.is_zero()) return out;
  for (const auto& [exps, c] : terms_) out.add_term(exps, c * s);
  return out;
}

Polynomial Polynomial::partial(int i) const {
  if (i < 1 || i > nvars_) throw DomainError("partial: variable index out of range");
  Polynomial out(nvars_);
  size_t slot = static_cast<size_t>(i - 1);
  for (const auto& [exps, c] : terms_) {
    int e = exps[slot];
    if (e == 0) continue;
    std::vector<int> lowered = exps;
    lowered[slot] = e - 1;
    out.add_term(std::move(lowered), c * Rational(e));
  }
  return out;
}

Rational Polynomial::evaluate(std::span<const Rational> point) const {
  if (point.size() != static_cast<size_t>(nvars_)) {
    throw DimensionError("evaluate: point length does not match variable count");
  }
  // power cache per variable, grown on demand
  std::vector<std::vector<Rational>> powers(static_cast<size_t>(nvars_));
  for (auto& p : powers) p.push_back(Rational(1));
  auto power = [&](size_t var, int e) -> const Rational& {
    auto& cache = powers[var];
    while (static_cast<int>(cache.size()) <= e) {
      cache.push_back(cache.back() * point[var]);
    }
    return cache[static_cast<size_t>(e)];
  };
  Rational sum;
  for (const auto& [exps, c] : terms_) {
    Rational term = c;
    for (size_t v = 0; v < exps.size(); ++v) {
      if (exps[v] != 0) term *= power(v, exps[v]);
    }
    sum += term;
  }
  return sum;
}

PolyForm::PolyForm(int nvars) : nvars_(nvars) {
  if (nvars < 1) throw DomainError("form: need at least one variable");
}

PolyForm PolyForm::from_polynomial(const Polynomial& f) {
  PolyForm out(f.nvars());
  out.add_term(Combination(f.nvars(), {}), f);
  return out;
}

void PolyForm::add_term(const Combination& index, const Polynomial& f) {
  if (index.ambient != nvars_) throw DimensionError("form term: index ambient mismatch");
  if (f.nvars() != nvars_) throw DimensionError("form term: coefficient variable count mismatch");
  if (f.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(index, f);
  if (!inserted) {
    it->second = it->second + f;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

PolyForm PolyForm::operator+(const PolyForm& o) const {
  if (nvars_ != o.nvars_) throw DimensionError("form sum: variable count mismatch");
  PolyForm out = *this;
  for (const auto& [index, f] : o.terms_) out.add_term(index, f);
  return out;
}

PolyForm wedge(const PolyForm& a, const PolyForm& b) {
  if (a.nvars() != b.nvars()) throw DimensionError("form wedge: variable count mismatch");
  int n = a.nvars();
  PolyForm out(n);
  for (const auto& [ia, fa] : a.terms()) {
    for (const auto& [ib, fb] : b.terms()) {
      auto merged = merge_disjoint(ia.word, ib.word);
      if (!merged) continue;
      auto& [sign, word] = *merged;
      out.add_term(Combination(n, std::move(word)), (fa * fb) * Rational(sign));
    }
  }
  return out;
}

PolyForm exterior_derivative(const PolyForm& a) {
  int n = a.nvars();
  PolyForm out(n);
  for (const auto& [index, f] : a.terms()) {
    for (int i = 1; i <= n; ++i) {
      Polynomial df = f.partial(i);
      if (df.is_zero()) continue;
      auto merged = merge_disjoint(std::vector<int>{i}, index.word);
      if (!merged) continue;  // dx_i repeats inside dx_I
      auto& [sign, word] = *merged;
      out.add_term(Combination(n, std::move(word)), df * Rational(sign));
    }
  }
  return out;
}

GradedElement evaluate(const PolyForm& a, std::span<const Rational> point) {
  if (point.size() != static_cast<size_t>(a.nvars())) {
    throw DimensionError("evaluate: point length does not match variable count");
  }
  GradedElement out(a.nvars());
  for (const auto& [index, f] : a.terms()) {
    Rational value = f.evaluate(point);
    if (value.is_zero()) continue;
    out.add_part(Multivector::basis(a.nvars(), index, value));
  }
  return out;
}

}  // namespace extalg
