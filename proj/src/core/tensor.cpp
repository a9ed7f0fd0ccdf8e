#include "tensor.hpp"

namespace extalg {

namespace {

size_t checked_power(int n, int m) {
  size_t size = 1;
  for (int i = 0; i < m; ++i) {
    if (size > (size_t{1} << 22) / static_cast<size_t>(n)) {
      throw DomainError("tensor: component count n^m too large");
    }
    size *= static_cast<size_t>(n);
  }
  return size;
}

}  // namespace

Tensor::Tensor(int ambient, int order) : ambient_(ambient), order_(order) {
  if (ambient < 1) throw DomainError("tensor: ambient must be positive");
  if (order < 0) throw DomainError("tensor: negative order");
  comp_.assign(checked_power(ambient, order), Rational());
}

Tensor::Tensor(int ambient, int order, std::vector<Rational> components)
    : Tensor(ambient, order) {
  if (components.size() != comp_.size()) {
    throw DimensionError("tensor: component count does not equal n^m");
  }
  comp_ = std::move(components);
}

Tensor Tensor::basis(int ambient, const Placement& word) {
  if (word.ambient != ambient) throw DimensionError("tensor basis: ambient mismatch");
  Tensor t(ambient, word.size());
  t.at(word.word) = Rational(1);
  return t;
}

size_t Tensor::rank_of(std::span<const int> word) const {
  if (static_cast<int>(word.size()) != order_) {
    throw DimensionError("tensor: placement length does not match order");
  }
  size_t rank = 0;
  for (int v : word) {
    if (v < 1 || v > ambient_) throw DomainError("tensor: placement entry out of range");
    rank = rank * static_cast<size_t>(ambient_) + static_cast<size_t>(v - 1);
  }
  return rank;
}

Tensor Tensor::operator+(const Tensor& o) const {
  if (ambient_ != o.ambient_ || order_ != o.order_) {
    throw DimensionError("tensor sum: shape mismatch");
  }
  Tensor out(ambient_, order_);
  for (size_t k = 0; k < comp_.size(); ++k) out.comp_[k] = comp_[k] + o.comp_[k];
  return out;
}

Tensor Tensor::operator*(const Rational& s) const {
  Tensor out(ambient_, order_);
  for (size_t k = 0; k < comp_.size(); ++k) out.comp_[k] = comp_[k] * s;
  return out;
}

Vector::Vector(int n, std::vector<Rational> comps) : ambient(n), components(std::move(comps)) {
  if (n < 1) throw DomainError("vector: ambient must be positive");
  if (components.size() != static_cast<size_t>(n)) {
    throw DimensionError("vector: component count does not equal ambient");
  }
}

Tensor Vector::to_tensor() const {
  Tensor t(ambient, 1, components);
  return t;
}

Tensor tensor_product(const Tensor& s, const Tensor& t) {
  if (s.ambient() != t.ambient()) throw DimensionError("tensor product: ambient mismatch");
  Tensor out(s.ambient(), s.order() + t.order());
  size_t right = t.components().size();
  for (size_t i = 0; i < s.components().size(); ++i) {
    const Rational& a = s.components()[i];
    if (a.is_zero()) continue;
    for (size_t j = 0; j < right; ++j) {
      const Rational& b = t.components()[j];
      if (b.is_zero()) continue;
      out.components()[i * right + j] = a * b;
    }
  }
  return out;
}

namespace {

// All permutations of {1..m} with their signs, in lexicographic order.
std::vector<std::pair<std::vector<int>, int>> signed_permutations(int m) {
  std::vector<std::pair<std::vector<int>, int>> out;
  for (const auto& word : InjectionRange(m, m)) {
    out.emplace_back(word, parity_of_word(word));
  }
  return out;
}

// Decodes a placement rank into the word buffer (1-based entries).
void decode_rank(size_t rank, int n, std::vector<int>& word) {
  for (size_t k = word.size(); k-- > 0;) {
    word[k] = static_cast<int>(rank % static_cast<size_t>(n)) + 1;
    rank /= static_cast<size_t>(n);
  }
}

}  // namespace

Tensor alt(const Tensor& t) {
  int n = t.ambient();
  int m = t.order();
  auto perms = signed_permutations(m);
  Rational norm = inverse_factorial(m);
  Tensor out(n, m);
  std::vector<int> word(static_cast<size_t>(m));
  std::vector<int> permuted(static_cast<size_t>(m));
  auto& comp = out.components();
  for (size_t r = 0; r < comp.size(); ++r) {
    decode_rank(r, n, word);
    Rational sum;
    for (const auto& [images, sign] : perms) {
      for (int k = 0; k < m; ++k) {
        permuted[static_cast<size_t>(k)] = word[static_cast<size_t>(images[static_cast<size_t>(k)] - 1)];
      }
      const Rational& c = t.at(permuted);
      if (c.is_zero()) continue;
      if (sign > 0) {
        sum += c;
      } else {
        sum -= c;
      }
    }
    comp[r] = sum * norm;
  }
  return out;
}

bool is_alternating(const Tensor& t) {
  int n = t.ambient();
  int m = t.order();
  std::vector<int> word(static_cast<size_t>(m));
  for (size_t r = 0; r < t.components().size(); ++r) {
    decode_rank(r, n, word);
    bool repeated = false;
    for (int k = 0; k + 1 < m && !repeated; ++k) {
      for (int l = k + 1; l < m; ++l) {
        if (word[static_cast<size_t>(k)] == word[static_cast<size_t>(l)]) {
          repeated = true;
          break;
        }
      }
    }
    if (repeated) {
      if (!t.components()[r].is_zero()) return false;
      continue;
    }
    std::vector<int> swapped = word;
    for (int k = 0; k + 1 < m; ++k) {
      std::swap(swapped[static_cast<size_t>(k)], swapped[static_cast<size_t>(k + 1)]);
      if (t.at(swapped) != -t.components()[r]) return false;
      std::swap(swapped[static_cast<size_t>(k)], swapped[static_cast<size_t>(k + 1)]);
    }
  }
  return true;
}

Tensor embed_multivector(const Multivector& v) {
  int n = v.ambient();
  int m = v.grade();
  if (n < 1) throw DomainError("embed: ambient must be positive");
  Tensor out(n, m);
  auto perms = signed_permutations(m);
  std::vector<int> word(static_cast<size_t>(m));
  for (const auto& [index, c] : v.terms()) {
    for (const auto& [images, sign] : perms) {
      for (int k = 0; k < m; ++k) {
        word[static_cast<size_t>(k)] = index.word[static_cast<size_t>(images[static_cast<size_t>(k)] - 1)];
      }
      out.at(word) = (sign > 0) ? c : -c;
    }
  }
  return out;
}

Multivector project_multivector(const Tensor& t) {
  if (!is_alternating(t)) throw DomainError("project: tensor is not alternating");
  int n = t.ambient();
  int m = t.order();
  Multivector out(n, m);
  if (m > n) return out;  // forced zero
  for (const auto& word : CombinationRange(n, m)) {
    const Rational& c = t.at(word);
    if (!c.is_zero()) out.add_term(Combination(n, word), c);
  }
  return out;
}

}  // namespace extalg
