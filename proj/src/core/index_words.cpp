#include "index_words.hpp"

#include <algorithm>
#include <numeric>

namespace extalg {

namespace {

void check_entries_in_range(int n, const std::vector<int>& word, const char* what) {
  for (int v : word) {
    if (v < 1 || v > n) {
      throw DomainError(std::string(what) + ": entry out of range [1, n]");
    }
  }
}

}  // namespace

Placement::Placement(int n, std::vector<int> w) : ambient(n), word(std::move(w)) {
  if (n < 1) throw DomainError("placement: ambient must be positive");
  check_entries_in_range(n, word, "placement");
}

Injection::Injection(int n, std::vector<int> w) : ambient(n), word(std::move(w)) {
  if (n < 0) throw DomainError("injection: ambient must be nonnegative");
  if (static_cast<int>(word.size()) > n) throw DomainError("injection: length exceeds ambient");
  check_entries_in_range(n, word, "injection");
  std::vector<char> seen(static_cast<size_t>(n) + 1, 0);
  for (int v : word) {
    if (seen[v]) throw DomainError("injection: repeated entry");
    seen[v] = 1;
  }
}

Combination::Combination(int n, std::vector<int> w) : ambient(n), word(std::move(w)) {
  if (n < 0) throw DomainError("combination: ambient must be nonnegative");
  if (static_cast<int>(word.size()) > n) throw DomainError("combination: length exceeds ambient");
  check_entries_in_range(n, word, "combination");
  for (size_t i = 1; i < word.size(); ++i) {
    if (word[i - 1] >= word[i]) throw DomainError("combination: word not strictly increasing");
  }
}

bool Combination::operator<(const Combination& o) const {
  if (word.size() != o.word.size()) return word.size() < o.word.size();
  return word < o.word;
}

Permutation::Permutation(std::vector<int> im) : images(std::move(im)) {
  int m = degree();
  std::vector<char> seen(static_cast<size_t>(m) + 1, 0);
  for (int v : images) {
    if (v < 1 || v > m || seen[v]) throw DomainError("permutation: images not a bijection of {1..m}");
    seen[v] = 1;
  }
}

Permutation Permutation::identity(int degree) {
  if (degree < 0) throw DomainError("permutation: negative degree");
  std::vector<int> im(static_cast<size_t>(degree));
  std::iota(im.begin(), im.end(), 1);
  return Permutation(std::move(im));
}

Permutation compose(const Permutation& p, const Permutation& q) {
  if (p.degree() != q.degree()) throw DimensionError("compose: degree mismatch");
  std::vector<int> im(p.images.size());
  for (int k = 1; k <= p.degree(); ++k) {
    im[k - 1] = p(q(k));
  }
  return Permutation(std::move(im));
}

namespace {

// Counts inversions while merge-sorting buf[lo, hi).
std::uint64_t merge_count(std::vector<int>& buf, std::vector<int>& tmp, size_t lo, size_t hi) {
  if (hi - lo < 2) return 0;
  size_t mid = lo + (hi - lo) / 2;
  std::uint64_t inv = merge_count(buf, tmp, lo, mid) + merge_count(buf, tmp, mid, hi);
  size_t i = lo, j = mid, k = lo;
  while (i < mid && j < hi) {
    if (buf[i] <= buf[j]) {
      tmp[k++] = buf[i++];
    } else {
      inv += mid - i;
      tmp[k++] = buf[j++];
    }
  }
  while (i < mid) tmp[k++] = buf[i++];
  while (j < hi) tmp[k++] = buf[j++];
  std::copy(tmp.begin() + static_cast<long>(lo), tmp.begin() + static_cast<long>(hi),
            buf.begin() + static_cast<long>(lo));
  return inv;
}

}  // namespace

int parity_of_word(std::span<const int> word) {
  std::vector<int> buf(word.begin(), word.end());
  std::vector<int> tmp(buf.size());
  std::uint64_t inv = merge_count(buf, tmp, 0, buf.size());
  return (inv % 2 == 0) ? 1 : -1;
}

int parity(const Permutation& p) { return parity_of_word(p.images); }

// --- streams ---------------------------------------------------------------

CombinationRange::CombinationRange(int n, int m) : n_(n), m_(m) {
  if (n < 0 || m < 0 || m > n) throw DomainError("combinations: need 0 <= m <= n");
}

CombinationRange::iterator::iterator(int n, int m) : n_(n), m_(m), word_(static_cast<size_t>(m)) {
  std::iota(word_.begin(), word_.end(), 1);
}

CombinationRange::iterator& CombinationRange::iterator::operator++() {
  for (int i = m_ - 1; i >= 0; --i) {
    if (word_[static_cast<size_t>(i)] < n_ - (m_ - 1 - i)) {
      ++word_[static_cast<size_t>(i)];
      for (int j = i + 1; j < m_; ++j) {
        word_[static_cast<size_t>(j)] = word_[static_cast<size_t>(j - 1)] + 1;
      }
      return *this;
    }
  }
  done_ = true;
  return *this;
}

InjectionRange::InjectionRange(int n, int m) : n_(n), m_(m) {
  if (n < 0 || m < 0 || m > n) throw DomainError("injections: need 0 <= m <= n");
}

InjectionRange::iterator::iterator(int n, int m)
    : n_(n), m_(m), word_(static_cast<size_t>(m)), used_(static_cast<size_t>(n) + 1, 0) {
  std::iota(word_.begin(), word_.end(), 1);
  for (int v = 1; v <= m; ++v) used_[static_cast<size_t>(v)] = 1;
}

InjectionRange::iterator& InjectionRange::iterator::operator++() {
  // Bump the rightmost position that still has a larger unused value, then
  // refill the suffix with the smallest unused values in ascending order.
  for (int i = m_ - 1; i >= 0; --i) {
    for (int j = i; j < m_; ++j) used_[static_cast<size_t>(word_[static_cast<size_t>(j)])] = 0;
    int next = 0;
    for (int v = word_[static_cast<size_t>(i)] + 1; v <= n_; ++v) {
      if (!used_[static_cast<size_t>(v)]) {
        next = v;
        break;
      }
    }
    if (next == 0) continue;
    word_[static_cast<size_t>(i)] = next;
    used_[static_cast<size_t>(next)] = 1;
    int v = 1;
    for (int j = i + 1; j < m_; ++j) {
      while (used_[static_cast<size_t>(v)]) ++v;
      word_[static_cast<size_t>(j)] = v;
      used_[static_cast<size_t>(v)] = 1;
      ++v;
    }
    return *this;
  }
  done_ = true;
  return *this;
}

PlacementRange::PlacementRange(int n, int m) : n_(n), m_(m) {
  if (n < 1) throw DomainError("placements: ambient must be positive");
  if (m < 0) throw DomainError("placements: negative length");
}

PlacementRange::iterator::iterator(int n, int m) : n_(n), m_(m), word_(static_cast<size_t>(m), 1) {}

PlacementRange::iterator& PlacementRange::iterator::operator++() {
  for (int i = m_ - 1; i >= 0; --i) {
    if (word_[static_cast<size_t>(i)] < n_) {
      ++word_[static_cast<size_t>(i)];
      for (int j = i + 1; j < m_; ++j) word_[static_cast<size_t>(j)] = 1;
      return *this;
    }
  }
  done_ = true;
  return *this;
}

std::vector<Combination> enum_combinations(int n, int m) {
  std::vector<Combination> out;
  for (const auto& w : CombinationRange(n, m)) out.emplace_back(n, w);
  return out;
}

std::vector<Injection> enum_injections(int n, int m) {
  std::vector<Injection> out;
  for (const auto& w : InjectionRange(n, m)) out.emplace_back(n, w);
  return out;
}

std::vector<Placement> enum_placements(int n, int m) {
  std::vector<Placement> out;
  for (const auto& w : PlacementRange(n, m)) out.emplace_back(n, w);
  return out;
}

// --- rank / unrank ----------------------------------------------------------

std::uint64_t binomial(int n, int m) {
  if (m < 0 || n < 0 || m > n) return 0;
  if (m > n - m) m = n - m;
  unsigned __int128 result = 1;
  for (int i = 0; i < m; ++i) {
    result *= static_cast<std::uint64_t>(n - i);
    result /= static_cast<std::uint64_t>(i + 1);  // exact at every step
    if (result > static_cast<unsigned __int128>(~std::uint64_t{0}) >> 8) {
      throw DomainError("binomial: overflow");
    }
  }
  return static_cast<std::uint64_t>(result);
}

std::uint64_t rank_combination(const Combination& c) {
  int n = c.ambient;
  int m = c.size();
  std::uint64_t rank = 0;
  int prev = 0;
  for (int i = 0; i < m; ++i) {
    for (int v = prev + 1; v < c.word[static_cast<size_t>(i)]; ++v) {
      rank += binomial(n - v, m - 1 - i);
    }
    prev = c.word[static_cast<size_t>(i)];
  }
  return rank;
}

Combination unrank_combination(int n, int m, std::uint64_t rank) {
  if (n < 0 || m < 0 || m > n) throw DomainError("unrank: need 0 <= m <= n");
  if (rank >= binomial(n, m)) throw DomainError("unrank: rank out of range");
  std::vector<int> word;
  word.reserve(static_cast<size_t>(m));
  int prev = 0;
  for (int i = 0; i < m; ++i) {
    for (int v = prev + 1;; ++v) {
      std::uint64_t below = binomial(n - v, m - 1 - i);
      if (rank < below) {
        word.push_back(v);
        prev = v;
        break;
      }
      rank -= below;
    }
  }
  return Combination(n, std::move(word));
}

// --- injection <-> (combination, permutation) --------------------------------

std::pair<Combination, Permutation> decompose_injection(const Injection& j) {
  std::vector<int> sorted = j.word;
  std::sort(sorted.begin(), sorted.end());
  std::vector<int> images(j.word.size());
  for (size_t k = 0; k < j.word.size(); ++k) {
    auto it = std::lower_bound(sorted.begin(), sorted.end(), j.word[k]);
    images[k] = static_cast<int>(it - sorted.begin()) + 1;
  }
  return {Combination(j.ambient, std::move(sorted)), Permutation(std::move(images))};
}

Injection recompose_injection(const Combination& c, const Permutation& p) {
  if (c.size() != p.degree()) throw DimensionError("recompose: size mismatch");
  std::vector<int> word(c.word.size());
  for (int k = 1; k <= p.degree(); ++k) {
    word[static_cast<size_t>(k - 1)] = c.word[static_cast<size_t>(p(k) - 1)];
  }
  return Injection(c.ambient, std::move(word));
}

// --- complements and shuffle signs -------------------------------------------

Combination complement(const Combination& c) {
  std::vector<int> out;
  out.reserve(static_cast<size_t>(c.ambient - c.size()));
  size_t k = 0;
  for (int v = 1; v <= c.ambient; ++v) {
    if (k < c.word.size() && c.word[k] == v) {
      ++k;
    } else {
      out.push_back(v);
    }
  }
  return Combination(c.ambient, std::move(out));
}

std::optional<std::pair<int, std::vector<int>>> merge_disjoint(std::span<const int> a,
                                                               std::span<const int> b) {
  std::vector<int> merged;
  merged.reserve(a.size() + b.size());
  size_t i = 0, j = 0;
  std::uint64_t crossings = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] == b[j]) return std::nullopt;
    if (a[i] < b[j]) {
      merged.push_back(a[i++]);
    } else {
      // every remaining entry of a exceeds b[j]
      crossings += a.size() - i;
      merged.push_back(b[j++]);
    }
  }
  while (i < a.size()) merged.push_back(a[i++]);
  while (j < b.size()) merged.push_back(b[j++]);
  int sign = (crossings % 2 == 0) ? 1 : -1;
  return std::make_pair(sign, std::move(merged));
}

int split_sign(const Combination& a, const Combination& b) {
  if (a.ambient != b.ambient) throw DimensionError("split_sign: ambient mismatch");
  auto merged = merge_disjoint(a.word, b.word);
  if (!merged) throw DomainError("split_sign: words not disjoint");
  return merged->first;
}

}  // namespace extalg
