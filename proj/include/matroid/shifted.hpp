#pragma once

#include <algorithm>
#include <functional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "matroid/word.hpp"

namespace matroid {

/// A shifted matroid <T>: the principal order ideal generated by T in the
/// componentwise order on k-subsets of [n].  T may be empty (rank 0).
struct DefiningBasis {
  SubsetWord t;

  DefiningBasis(SubsetWord t_) : t(std::move(t_)) {}
  DefiningBasis(std::vector<int> elems, int n) : t(std::move(elems), n) {}

  int n() const { return t.n(); }
  int rank() const { return static_cast<int>(t.size()); }

  bool operator==(const DefiningBasis& o) const { return t == o.t; }
};

/// "n=8; T=2 4 6 8"
inline std::string format_defining_basis(const DefiningBasis& m) {
  return "n=" + std::to_string(m.n()) + "; T=" + format_subset_word(m.t);
}

inline bool is_basis(const DefiningBasis& m, const SubsetWord& s) {
  if (static_cast<int>(s.size()) != m.rank())
    throw std::invalid_argument("candidate basis has wrong cardinality");
  return componentwise_leq(s, m.t);
}

/// Number of k-subsets S with S componentwise below T.  Dynamic program over
/// prefixes: f_i(x) = #{s_1<...<s_i : s_i = x, s_j <= t_j} = sum_{y<x} f_{i-1}(y).
inline Int count_bases(const DefiningBasis& m) {
  const int k = m.rank();
  if (k == 0) return 1;  // the empty basis
  std::vector<Int> f(m.n() + 1, 0);
  for (int x = 1; x <= m.t[0]; ++x) f[x] = 1;
  for (int i = 1; i < k; ++i) {
    std::vector<Int> g(m.n() + 1, 0);
    Int prefix = 0;
    for (int x = 1; x <= m.t[i]; ++x) {
      prefix += f[x - 1];
      g[x] = prefix;
    }
    f = std::move(g);
  }
  Int total = 0;
  for (int x = 1; x <= m.t[k - 1]; ++x) total += f[x];
  return total;
}

/// All bases of <T>, in lexicographic order.
inline std::vector<SubsetWord> enumerate_bases(const DefiningBasis& m,
                                               std::size_t cap = 5'000'000) {
  if (count_bases(m) > cap) throw ResourceLimitError("basis count exceeds cap");
  const int k = m.rank();
  std::vector<SubsetWord> out;
  std::vector<int> cur;
  cur.reserve(k);
  std::function<void(int)> rec = [&](int lo) {
    int i = static_cast<int>(cur.size());
    if (i == k) {
      out.emplace_back(cur, m.n());
      return;
    }
    for (int x = lo; x <= m.t[i]; ++x) {
      cur.push_back(x);
      rec(x + 1);
      cur.pop_back();
    }
  };
  rec(1);
  return out;
}

/// Loops: every element strictly above max(T).  Rank 0 makes every element a loop.
inline SubsetWord loops(const DefiningBasis& m) {
  int top = m.rank() == 0 ? 0 : m.t[m.rank() - 1];
  std::vector<int> v;
  for (int e = top + 1; e <= m.n(); ++e) v.push_back(e);
  return SubsetWord(std::move(v), m.n());
}

/// Coloops: the maximal initial run {1..j} with t_i = i (b_i <= t_i = i forces b_i = i).
inline SubsetWord coloops(const DefiningBasis& m) {
  std::vector<int> v;
  for (int i = 0; i < m.rank() && m.t[i] == i + 1; ++i) v.push_back(i + 1);
  return SubsetWord(std::move(v), m.n());
}

struct Contraction {
  DefiningBasis minor;
  std::vector<int> removed_coloops;  // old labels, always an initial run {1..j}
  int shift = 0;                     // old label e maps to e - shift for e > shift

  int old_to_new(int e) const { return e - shift; }
  int new_to_old(int e) const { return e + shift; }
};

/// Removes all coloops and re-normalizes labels to 1..n'.  Idempotent.
inline Contraction contract_coloops(const DefiningBasis& m) {
  SubsetWord cl = coloops(m);
  const int j = static_cast<int>(cl.size());
  std::vector<int> rest;
  for (int i = j; i < m.rank(); ++i) rest.push_back(m.t[i] - j);
  Contraction c{DefiningBasis(std::move(rest), m.n() - j), cl.elements(), j};
  return c;
}

/// The dual: defining basis {n+1-x : x in [n]\T}, rank n-k.
inline DefiningBasis dual(const DefiningBasis& m) {
  std::vector<int> v;
  SubsetWord comp = m.t.complement();
  for (int x : comp.elements()) v.push_back(m.n() + 1 - x);
  std::sort(v.begin(), v.end());
  return DefiningBasis(std::move(v), m.n());
}

/// Circuit enumeration straight from the block structure: loops are the
/// elements above max(T); for each block index i the circuits are the words
/// c0 c1..cm with m = |T_i|+...+|T_l|, c1..cm componentwise below T_i..T_l,
/// c0 < c1, and (for i > 1) c0 above the last element of T_{i-1}.
/// Output sorted by (size, lexicographic).
inline std::vector<SubsetWord> circuits(const DefiningBasis& m) {
  std::vector<SubsetWord> out;
  SubsetWord ls = loops(m);
  for (int e : ls.elements()) out.push_back(SubsetWord({e}, m.n()));
  if (m.rank() == 0) {
    return out;
  }
  BlockDecomposition bd = block_decomposition(m.t);
  const std::size_t ell = bd.blocks.size();
  for (std::size_t i = 0; i < ell; ++i) {
    // Suffix word T_i T_{i+1} ... T_l as a flat vector.
    std::vector<int> suffix;
    for (std::size_t b = i; b < ell; ++b)
      for (int e : bd.blocks[b].elements()) suffix.push_back(e);
    const int msz = static_cast<int>(suffix.size());
    const int lower = i == 0 ? 0 : bd.blocks[i - 1].elements().back();
    std::vector<int> tail;
    tail.reserve(msz);
    std::function<void(int)> rec = [&](int lo) {
      int idx = static_cast<int>(tail.size());
      if (idx == msz) {
        // prepend every admissible c0
        for (int c0 = lower + 1; c0 < tail[0]; ++c0) {
          std::vector<int> circ;
          circ.reserve(msz + 1);
          circ.push_back(c0);
          circ.insert(circ.end(), tail.begin(), tail.end());
          out.emplace_back(std::move(circ), m.n());
        }
        return;
      }
      for (int x = lo; x <= suffix[idx]; ++x) {
        tail.push_back(x);
        rec(x + 1);
        tail.pop_back();
      }
    };
    rec(1);
  }
  std::sort(out.begin(), out.end(), [](const SubsetWord& a, const SubsetWord& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return out;
}

/// Paving means every circuit has size >= rank.  By the circuit structure this
/// is T = l, m, m+1, ..., n (one or two blocks, tail ending at n), extended to
/// every rank-1 matroid, whose circuits all have size >= 1.
inline bool is_paving(const DefiningBasis& m) {
  const int k = m.rank();
  if (k == 0) throw DegenerateInputError("is_paving is undefined at rank 0");
  if (k == 1) return true;
  for (int i = 1; i < k; ++i)
    if (m.t[i] != m.n() - k + 1 + i) return false;
  return true;
}

/// The free-plus-loops shape T = {1..k} with n > k: binary under the circuit
/// symmetric-difference test but matching neither printed shape of the
/// structural characterization.  Callers that compare the two answers treat
/// this case separately.
inline bool is_free_with_loops(const DefiningBasis& m) {
  if (m.n() <= m.rank()) return false;
  for (int i = 0; i < m.rank(); ++i)
    if (m.t[i] != i + 1) return false;
  return true;
}

/// Structural binaryness: T = [n] (Boolean, no circuits) or
/// T = {1,...,k} \ {l} u {m} with 1 <= l <= k < m <= n.
inline bool is_binary_structural(const DefiningBasis& m) {
  const int k = m.rank();
  if (k == m.n()) return true;  // Boolean
  if (k == 0) return false;
  if (m.t[k - 1] <= k) return false;  // t_k must be the bumped element m > k
  int skips = 0;
  for (int i = 0; i < k - 1; ++i) {
    if (m.t[i] == i + 1 + skips) continue;
    if (skips == 0 && m.t[i] == i + 2) {
      skips = 1;
      continue;
    }
    return false;
  }
  // With l = k the first k-1 entries are exactly 1..k-1 (skips == 0); with
  // l < k exactly one bump occurs.  Either way t_k > k completes the shape.
  return true;
}

}  // namespace matroid
