#pragma once

#include <vector>

#include "index_words.hpp"
#include "multivector.hpp"
#include "rational.hpp"

namespace extalg {

// Dense order-m tensor over an n-dimensional space. Components are stored by
// lexicographic placement rank: the word (i1..im) sits at
// sum (i_k - 1) * n^(m-k).
class Tensor {
 public:
  Tensor(int ambient, int order);
  Tensor(int ambient, int order, std::vector<Rational> components);

  static Tensor basis(int ambient, const Placement& word);

  int ambient() const { return ambient_; }
  int order() const { return order_; }
  const std::vector<Rational>& components() const { return comp_; }
  std::vector<Rational>& components() { return comp_; }

  const Rational& at(std::span<const int> word) const { return comp_[rank_of(word)]; }
  Rational& at(std::span<const int> word) { return comp_[rank_of(word)]; }

  Tensor operator+(const Tensor& o) const;
  Tensor operator*(const Rational& s) const;
  bool operator==(const Tensor&) const = default;

  size_t rank_of(std::span<const int> word) const;

 private:
  int ambient_;
  int order_;
  std::vector<Rational> comp_;
};

// Grade-1 coordinate vector; a convenience handle for building order-1
// tensors and simple wedges.
struct Vector {
  int ambient;
  std::vector<Rational> components;

  Vector(int n, std::vector<Rational> comps);
  Tensor to_tensor() const;
};

// Component at the concatenated placement (J, K) is s[J] * t[K].
Tensor tensor_product(const Tensor& s, const Tensor& t);

// Alternation projector: Alt(t)[J] = (1/m!) sum over permutations p of
// parity(p) * t[J o p]. The image is exactly the alternating subspace.
Tensor alt(const Tensor& t);

// True iff components vanish on repeated-entry words and flip sign under
// every adjacent entry transposition.
bool is_alternating(const Tensor& t);

// Coordinate embedding of the m-th exterior power into order-m tensors:
// e_I maps to sum over permutations of parity * basis placement, i.e.
// m! * alt(e_{i1} x ... x e_{im}). Keeps integral coordinates integral.
Tensor embed_multivector(const Multivector& v);

// Reads an alternating tensor's components at strictly increasing words;
// inverse of embed_multivector on its image. Throws unless alternating.
Multivector project_multivector(const Tensor& t);

}  // namespace extalg
