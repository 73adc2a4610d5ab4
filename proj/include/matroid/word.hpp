#pragma once

#include <algorithm>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "matroid/errors.hpp"
#include "matroid/rational.hpp"

namespace matroid {

/// A weakly increasing word over the alphabet [n].  Immutable after construction.
/// The empty word is legal; it is the identity for sorted_concat.
class Word {
 public:
  Word(std::vector<int> letters, int n) : letters_(std::move(letters)), n_(n) {
    if (n_ < 0) throw std::invalid_argument("ground-set size must be non-negative");
    for (std::size_t i = 0; i < letters_.size(); ++i) {
      if (letters_[i] < 1 || letters_[i] > n_)
        throw std::invalid_argument("letter " + std::to_string(letters_[i]) +
                                    " outside [1," + std::to_string(n_) + "]");
      if (i > 0 && letters_[i - 1] > letters_[i])
        throw std::invalid_argument("letters must be weakly increasing");
    }
  }

  static Word empty(int n) { return Word({}, n); }

  int n() const { return n_; }
  std::size_t size() const { return letters_.size(); }
  int operator[](std::size_t i) const { return letters_[i]; }
  const std::vector<int>& letters() const { return letters_; }

  bool operator==(const Word& o) const = default;
  /// Lexicographic, used only for deterministic output ordering.
  bool operator<(const Word& o) const { return letters_ < o.letters_; }

 private:
  std::vector<int> letters_;
  int n_;
};

/// A strictly increasing word, identified with a subset of [n].
/// Carries a bitmask (bit e-1 set iff e is a member) for O(1) membership.
class SubsetWord {
 public:
  SubsetWord(std::vector<int> elems, int n) : word_(std::move(elems), n) {
    for (std::size_t i = 1; i < word_.size(); ++i)
      if (word_[i - 1] >= word_[i])
        throw std::invalid_argument("elements must be strictly increasing");
    for (int e : word_.letters()) boost::multiprecision::bit_set(mask_, e - 1);
  }

  static SubsetWord empty(int n) { return SubsetWord(std::vector<int>{}, n); }

  static SubsetWord full(int n) {
    std::vector<int> v(n);
    for (int i = 0; i < n; ++i) v[i] = i + 1;
    return SubsetWord(std::move(v), n);
  }

  const Word& word() const { return word_; }
  int n() const { return word_.n(); }
  std::size_t size() const { return word_.size(); }
  int operator[](std::size_t i) const { return word_[i]; }
  const std::vector<int>& elements() const { return word_.letters(); }
  const Int& mask() const { return mask_; }

  bool contains(int e) const {
    return e >= 1 && e <= n() && boost::multiprecision::bit_test(mask_, e - 1);
  }

  SubsetWord complement() const {
    std::vector<int> v;
    v.reserve(n() - size());
    for (int e = 1; e <= n(); ++e)
      if (!contains(e)) v.push_back(e);
    return SubsetWord(std::move(v), n());
  }

  bool operator==(const SubsetWord& o) const { return word_ == o.word_; }
  bool operator<(const SubsetWord& o) const { return word_ < o.word_; }

 private:
  Word word_;
  Int mask_ = 0;
};

namespace detail {
inline void require_same_length(const Word& s, const Word& t) {
  if (s.size() != t.size()) throw std::invalid_argument("words have different lengths");
}
inline void require_same_ground(const Word& a, const Word& b) {
  if (a.n() != b.n()) throw std::invalid_argument("words live on different ground sets");
}
}  // namespace detail

/// The componentwise partial order: S(i) <= T(i) at every index.
inline bool componentwise_leq(const Word& s, const Word& t) {
  detail::require_same_length(s, t);
  for (std::size_t i = 0; i < s.size(); ++i)
    if (s[i] > t[i]) return false;
  return true;
}

inline bool componentwise_leq(const SubsetWord& s, const SubsetWord& t) {
  return componentwise_leq(s.word(), t.word());
}

/// A position bijection pi with S(i) <= T(pi(i)) for all i, when one exists.
/// Such a bijection exists exactly when componentwise_leq(S,T) holds, and then
/// the identity works, so that is what we return.  pi is 0-based.
inline std::optional<std::vector<int>> matching_witness(const Word& s, const Word& t) {
  detail::require_same_length(s, t);
  if (!componentwise_leq(s, t)) return std::nullopt;
  std::vector<int> pi(s.size());
  for (std::size_t i = 0; i < pi.size(); ++i) pi[i] = static_cast<int>(i);
  return pi;
}

/// Multiset union of the letters, re-sorted.  Written A+B in infix contexts.
inline Word sorted_concat(const Word& a, const Word& b) {
  detail::require_same_ground(a, b);
  std::vector<int> out(a.size() + b.size());
  std::merge(a.letters().begin(), a.letters().end(), b.letters().begin(), b.letters().end(),
             out.begin());
  return Word(std::move(out), a.n());
}

inline Word sorted_concat(const SubsetWord& a, const SubsetWord& b) {
  return sorted_concat(a.word(), b.word());
}

/// Blocks: maximal runs of consecutive integers of T.  Gaps: the same for [n]\T.
struct BlockDecomposition {
  std::vector<SubsetWord> blocks;
  std::vector<SubsetWord> gaps;
  bool first_run_is_gap = false;  // true iff 1 is not in T

  std::size_t block_size(std::size_t i) const { return blocks[i].size(); }
};

namespace detail {
inline std::vector<SubsetWord> runs_of(const std::vector<int>& sorted, int n) {
  std::vector<SubsetWord> out;
  std::vector<int> cur;
  for (int e : sorted) {
    if (!cur.empty() && e != cur.back() + 1) {
      out.emplace_back(std::move(cur), n);
      cur.clear();
    }
    cur.push_back(e);
  }
  if (!cur.empty()) out.emplace_back(std::move(cur), n);
  return out;
}
}  // namespace detail

inline BlockDecomposition block_decomposition(const SubsetWord& t) {
  if (t.size() == 0) throw DegenerateInputError("block decomposition of the empty set is undefined");
  BlockDecomposition bd;
  bd.blocks = detail::runs_of(t.elements(), t.n());
  bd.gaps = detail::runs_of(t.complement().elements(), t.n());
  bd.first_run_is_gap = !t.contains(1);
  return bd;
}

/// Textual form: space-separated increasing integers, e.g. "2 4 6 8".
inline std::string format_subset_word(const SubsetWord& s) {
  std::ostringstream os;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) os << ' ';
    os << s[i];
  }
  return os.str();
}

/// Parses the textual form; errors name the position of the offending token.
inline SubsetWord parse_subset_word(const std::string& text, int n) {
  std::istringstream is(text);
  std::vector<int> elems;
  std::string tok;
  int pos = 0;
  while (is >> tok) {
    ++pos;
    int v = 0;
    try {
      std::size_t used = 0;
      v = std::stoi(tok, &used);
      if (used != tok.size()) throw std::invalid_argument(tok);
    } catch (const std::exception&) {
      throw std::invalid_argument("token " + std::to_string(pos) + " ('" + tok +
                                  "') is not an integer");
    }
    if (v < 1 || v > n)
      throw std::invalid_argument("token " + std::to_string(pos) + " (" + tok +
                                  ") outside [1," + std::to_string(n) + "]");
    if (!elems.empty() && v <= elems.back())
      throw std::invalid_argument("token " + std::to_string(pos) + " (" + tok +
                                  ") breaks strict increase");
    elems.push_back(v);
  }
  return SubsetWord(std::move(elems), n);
}

}  // namespace matroid
