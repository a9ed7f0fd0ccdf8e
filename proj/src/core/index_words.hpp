#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"

namespace extalg {

// Multi-index words over {1..n}, the three families indexing everything else:
//
//   Placement    arbitrary word, repetition allowed   (tensor components)
//   Injection    pairwise-distinct word               (signed determinant sums)
//   Combination  strictly increasing word             (exterior basis elements)
//
// Values are 1-based; ranks and array positions are 0-based. Enumeration
// order is lexicographic on words, everywhere.

struct Placement {
  int ambient = 1;
  std::vector<int> word;

  Placement(int n, std::vector<int> w);
  int size() const { return static_cast<int>(word.size()); }
  bool operator==(const Placement&) const = default;
};

struct Injection {
  int ambient = 0;
  std::vector<int> word;

  Injection(int n, std::vector<int> w);
  int size() const { return static_cast<int>(word.size()); }
  bool operator==(const Injection&) const = default;
};

struct Combination {
  int ambient = 0;
  std::vector<int> word;

  Combination(int n, std::vector<int> w);
  int size() const { return static_cast<int>(word.size()); }
  bool operator==(const Combination&) const = default;

  // Graded-lexicographic order: shorter words first, lexicographic within a
  // size. For equal sizes this coincides with rank order.
  bool operator<(const Combination& o) const;
};

struct Permutation {
  std::vector<int> images;  // images[k] = p(k+1), a bijection of {1..m}

  explicit Permutation(std::vector<int> im);
  static Permutation identity(int degree);
  int degree() const { return static_cast<int>(images.size()); }
  int operator()(int k) const { return images[k - 1]; }
  bool operator==(const Permutation&) const = default;
};

// (p o q)(k) = p(q(k)).
Permutation compose(const Permutation& p, const Permutation& q);

// Sign of a permutation, (-1)^(inversion count), counted by mergesort.
int parity(const Permutation& p);

// Sign of an arbitrary pairwise-distinct word (the permutation sorting it).
int parity_of_word(std::span<const int> word);

// Lazily enumerated word streams in lexicographic order. Iterators own their
// cursor; dereferencing yields a reference into the iterator, so consumption
// is single-owner.
namespace detail {
struct StreamSentinel {};
}  // namespace detail

class CombinationRange {
 public:
  CombinationRange(int n, int m);

  class iterator {
   public:
    iterator(int n, int m);
    const std::vector<int>& operator*() const { return word_; }
    iterator& operator++();
    bool operator==(detail::StreamSentinel) const { return done_; }

   private:
    int n_, m_;
    bool done_ = false;
    std::vector<int> word_;
  };

  iterator begin() const { return iterator(n_, m_); }
  detail::StreamSentinel end() const { return {}; }

 private:
  int n_, m_;
};

class InjectionRange {
 public:
  InjectionRange(int n, int m);

  class iterator {
   public:
    iterator(int n, int m);
    const std::vector<int>& operator*() const { return word_; }
    iterator& operator++();
    bool operator==(detail::StreamSentinel) const { return done_; }

   private:
    int n_, m_;
    bool done_ = false;
    std::vector<int> word_;
    std::vector<char> used_;  // used_[v] for v in 1..n
  };

  iterator begin() const { return iterator(n_, m_); }
  detail::StreamSentinel end() const { return {}; }

 private:
  int n_, m_;
};

class PlacementRange {
 public:
  PlacementRange(int n, int m);

  class iterator {
   public:
    iterator(int n, int m);
    const std::vector<int>& operator*() const { return word_; }
    iterator& operator++();
    bool operator==(detail::StreamSentinel) const { return done_; }

   private:
    int n_, m_;
    bool done_ = false;
    std::vector<int> word_;
  };

  iterator begin() const { return iterator(n_, m_); }
  detail::StreamSentinel end() const { return {}; }

 private:
  int n_, m_;
};

// Eager variants.
std::vector<Combination> enum_combinations(int n, int m);
std::vector<Injection> enum_injections(int n, int m);
std::vector<Placement> enum_placements(int n, int m);

// Binomial coefficient with overflow detection (throws DomainError).
std::uint64_t binomial(int n, int m);

// 0-based position of a combination in lexicographic enumeration order.
std::uint64_t rank_combination(const Combination& c);
Combination unrank_combination(int n, int m, std::uint64_t rank);

// Injection ~ (sorted combination, permutation): word[k] = sorted[p(k)].
std::pair<Combination, Permutation> decompose_injection(const Injection& j);
Injection recompose_injection(const Combination& c, const Permutation& p);

// Sorted complement of c inside {1..ambient}.
Combination complement(const Combination& c);

// Sign of the shuffle sorting the concatenation (a, b):
// (-1)^#{(i,j) in a x b : i > j}. Throws DomainError unless disjoint.
int split_sign(const Combination& a, const Combination& b);

// Merged union of two disjoint combinations with the shuffle sign, or
// nullopt when they intersect.
std::optional<std::pair<int, std::vector<int>>> merge_disjoint(std::span<const int> a,
                                                               std::span<const int> b);

}  // namespace extalg
