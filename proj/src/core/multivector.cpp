#include "multivector.hpp"

#include <algorithm>

namespace extalg {

Multivector::Multivector(int ambient, int grade) : ambient_(ambient), grade_(grade) {
  if (ambient < 0) throw DomainError("multivector: negative ambient");
  if (grade < 0) throw DomainError("multivector: negative grade");
}

Multivector Multivector::basis(int ambient, const Combination& index, Rational coeff) {
  if (index.ambient != ambient) throw DimensionError("multivector basis: ambient mismatch");
  Multivector out(ambient, index.size());
  out.add_term(index, coeff);
  return out;
}

Multivector Multivector::scalar(int ambient, Rational value) {
  Multivector out(ambient, 0);
  out.add_term(Combination(ambient, {}), value);
  return out;
}

Rational Multivector::coeff(const Combination& index) const {
  auto it = terms_.find(index);
  return it == terms_.end() ? Rational() : it->second;
}

void Multivector::add_term(const Combination& index, const Rational& c) {
  if (index.ambient != ambient_ || index.size() != grade_) {
    throw DimensionError("multivector term: index does not match ambient/grade");
  }
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(index, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Multivector Multivector::operator+(const Multivector& o) const {
  if (ambient_ != o.ambient_ || grade_ != o.grade_) {
    throw DimensionError("multivector sum: ambient/grade mismatch");
  }
  Multivector out = *this;
  for (const auto& [index, c] : o.terms_) out.add_term(index, c);
  return out;
}

Multivector Multivector::operator-(const Multivector& o) const { return *this + o * Rational(-1); }

Multivector Multivector::operator*(const Rational& s) const {
  Multivector out(ambient_, grade_);
  if (s.is_zero()) return out;
  for (const auto& [index, c] : terms_) out.terms_.emplace(index, c * s);
  return out;
}

GradedElement::GradedElement(int ambient) : ambient_(ambient) {
  if (ambient < 0) throw DomainError("graded element: negative ambient");
}

GradedElement::GradedElement(const Multivector& part) : GradedElement(part.ambient()) {
  add_part(part);
}

GradedElement GradedElement::scalar(int ambient, Rational value) {
  return GradedElement(Multivector::scalar(ambient, std::move(value)));
}

Multivector GradedElement::part(int grade) const {
  auto it = parts_.find(grade);
  return it == parts_.end() ? Multivector(ambient_, grade) : it->second;
}

void GradedElement::add_part(const Multivector& mv) {
  if (mv.ambient() != ambient_) throw DimensionError("graded element: ambient mismatch");
  if (mv.is_zero()) return;
  auto [it, inserted] = parts_.try_emplace(mv.grade(), mv);
  if (!inserted) {
    it->second = it->second + mv;
    if (it->second.is_zero()) parts_.erase(it);
  }
}

GradedElement GradedElement::operator+(const GradedElement& o) const {
  if (ambient_ != o.ambient_) throw DimensionError("graded sum: ambient mismatch");
  GradedElement out = *this;
  for (const auto& [grade, mv] : o.parts_) out.add_part(mv);
  return out;
}

GradedElement GradedElement::operator*(const Rational& s) const {
  GradedElement out(ambient_);
  if (s.is_zero()) return out;
  for (const auto& [grade, mv] : parts_) out.parts_.emplace(grade, mv * s);
  return out;
}

Multivector wedge(const Multivector& u, const Multivector& v) {
  if (u.ambient() != v.ambient()) throw DimensionError("wedge: ambient mismatch");
  int n = u.ambient();
  Multivector out(n, u.grade() + v.grade());
  if (u.grade() + v.grade() > n) return out;
  for (const auto& [iu, cu] : u.terms()) {
    for (const auto& [iv, cv] : v.terms()) {
      auto merged = merge_disjoint(iu.word, iv.word);
      if (!merged) continue;
      auto& [sign, word] = *merged;
      out.add_term(Combination(n, std::move(word)), cu * cv * Rational(sign));
    }
  }
  return out;
}

GradedElement wedge(const GradedElement& u, const GradedElement& v) {
  if (u.ambient() != v.ambient()) throw DimensionError("wedge: ambient mismatch");
  GradedElement out(u.ambient());
  for (const auto& [p, up] : u.parts()) {
    for (const auto& [q, vq] : v.parts()) {
      out.add_part(wedge(up, vq));
    }
  }
  return out;
}

Matrix exterior_power_map(const Matrix& a, int m) {
  if (m < 0 || m > std::min(a.rows(), a.cols())) {
    throw DomainError("exterior power: grade out of range");
  }
  std::uint64_t out_rows = binomial(a.rows(), m);
  std::uint64_t out_cols = binomial(a.cols(), m);
  if (out_rows > (std::uint64_t{1} << 20) || out_cols > (std::uint64_t{1} << 20)) {
    throw DomainError("exterior power: compound matrix too large");
  }
  Matrix out(static_cast<int>(out_rows), static_cast<int>(out_cols));
  bool tabulate = a.cols() <= 20;  // one subset table per row selection
  int i = 0;
  for (const auto& rows : CombinationRange(a.rows(), m)) {
    if (tabulate) {
      SubsetMinorTable minors(a, rows);
      int j = 0;
      for (const auto& cols : CombinationRange(a.cols(), m)) {
        std::uint32_t mask = 0;
        for (int v : cols) mask |= std::uint32_t{1} << (v - 1);
        out.at(i, j) = minors.at(mask);
        ++j;
      }
    } else {
      Combination row_comb(a.rows(), rows);
      int j = 0;
      for (const auto& cols : CombinationRange(a.cols(), m)) {
        out.at(i, j) = minor_det(a, row_comb, Combination(a.cols(), cols));
        ++j;
      }
    }
    ++i;
  }
  return out;
}

Multivector apply_map(const Matrix& a, const Multivector& v) {
  if (v.ambient() != a.cols()) throw DimensionError("apply: multivector ambient must equal column count");
  int m = v.grade();
  if (m > std::min(a.rows(), a.cols())) throw DimensionError("apply: grade exceeds matrix rank bound");
  Multivector out(a.rows(), m);
  for (const auto& rows : CombinationRange(a.rows(), m)) {
    Combination target(a.rows(), rows);
    Rational c;
    for (const auto& [cols, coeff] : v.terms()) {
      c += minor_det(a, target, cols) * coeff;
    }
    out.add_term(target, c);
  }
  return out;
}

GradedElement apply_map(const Matrix& a, const GradedElement& v) {
  GradedElement out(a.rows());
  for (const auto& [grade, part] : v.parts()) out.add_part(apply_map(a, part));
  return out;
}

Rational pair(const Dual<Multivector>& w, const Multivector& v) {
  if (w.value.ambient() != v.ambient()) throw DimensionError("pair: ambient mismatch");
  if (w.value.grade() != v.grade()) throw DimensionError("pair: grade mismatch");
  Rational sum;
  for (const auto& [index, c] : w.value.terms()) {
    sum += c * v.coeff(index);
  }
  return sum;
}

Rational pair_chains(const Dual<GradedElement>& w, const GradedElement& v) {
  if (w.value.ambient() != v.ambient()) throw DimensionError("pair: ambient mismatch");
  Rational sum;
  for (const auto& [grade, part] : w.value.parts()) {
    sum += pair(Dual<Multivector>{part}, v.part(grade));
  }
  return sum;
}

Multivector contract(const Dual<Multivector>& x, const Multivector& v) {
  if (x.value.ambient() != v.ambient()) throw DimensionError("contract: ambient mismatch");
  if (x.value.grade() != 1) throw DomainError("contract: dual factor must have grade 1");
  if (v.grade() < 1) throw DomainError("contract: primal grade must be at least 1");
  int n = v.ambient();
  Multivector out(n, v.grade() - 1);
  for (const auto& [unit, ck] : x.value.terms()) {
    int k = unit.word[0];
    for (const auto& [index, cv] : v.terms()) {
      auto pos = std::find(index.word.begin(), index.word.end(), k);
      if (pos == index.word.end()) continue;
      int sign = ((pos - index.word.begin()) % 2 == 0) ? 1 : -1;
      std::vector<int> reduced;
      reduced.reserve(index.word.size() - 1);
      for (int entry : index.word) {
        if (entry != k) reduced.push_back(entry);
      }
      out.add_term(Combination(n, std::move(reduced)), ck * cv * Rational(sign));
    }
  }
  return out;
}

std::optional<std::pair<Rational, Combination>> simple_monomial(const Multivector& v) {
  if (v.terms().size() != 1) return std::nullopt;
  const auto& [index, c] = *v.terms().begin();
  return std::make_pair(c, index);
}

}  // namespace extalg
