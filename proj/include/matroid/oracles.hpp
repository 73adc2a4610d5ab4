#pragma once

#include <algorithm>
#include <bitset>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "matroid/recognition.hpp"
#include "matroid/threshold.hpp"

namespace matroid {

/// Ground truth computed from bases alone.  Nothing here shares a code path
/// with the structural implementations it cross-checks.

inline ExplicitMatroid explicit_from_defining(const DefiningBasis& m,
                                              std::size_t cap = 5'000'000) {
  std::vector<std::vector<int>> bs;
  for (const SubsetWord& b : enumerate_bases(m, cap)) bs.push_back(b.elements());
  return ExplicitMatroid{m.n(), m.rank(), std::move(bs)};
}

/// Outcome of the exact LP feasibility check.  Infeasibility carries the
/// contradictory eliminated row 0 >= contradiction with contradiction > 0.
struct LpWitness {
  bool feasible = false;
  std::vector<Rational> weights;
  std::optional<Rational> contradiction;
};

namespace detail {

constexpr std::size_t kLpRowLimit = 512;

struct LinCons {
  std::vector<Int> a;  // a . w >= b, integer coefficients throughout
  Rational b;
  std::bitset<kLpRowLimit> hist;  // which original rows combined into this one
};

/// Divide out the gcd of the coefficients; canonical key for deduplication
/// (keeping the largest right-hand side per key).
inline void normalize_cons(LinCons& c) {
  Int g = 0;
  for (const Int& v : c.a) g = boost::multiprecision::gcd(g, v);
  if (g > 1) {
    for (Int& v : c.a) v /= g;
    c.b /= g;
  }
}

inline std::string cons_key(const LinCons& c) {
  std::string key;
  for (const Int& v : c.a) {
    key += v.str();
    key += ',';
  }
  return key;
}

}  // namespace detail

/// Exact Fourier-Motzkin feasibility for the system
///   w(B) >= 1 for every basis, w(D) <= 0 for every other k-subset.
/// Greedy elimination order (fewest products first), gcd normalization,
/// dedup per coefficient vector, and Kohler's ancestor rule: a row combining
/// more than s+1 original rows after s eliminations is redundant and dropped.
/// Witness by back-substitution, midpoints of the surviving intervals.
inline LpWitness lp_threshold_oracle(const ExplicitMatroid& m,
                                     std::size_t stage_cap = 2'000'000) {
  using detail::LinCons;
  const int n = m.n;
  std::unordered_set<std::string> basis_keys;
  for (const auto& b : m.bases) basis_keys.insert(detail::subset_key(b));

  std::vector<LinCons> sys;
  std::vector<int> s(m.k);
  for (int i = 0; i < m.k; ++i) s[i] = i + 1;
  while (true) {
    LinCons c;
    c.a.assign(n, 0);
    bool basis = basis_keys.count(detail::subset_key(s)) > 0;
    for (int e : s) c.a[e - 1] = basis ? 1 : -1;
    c.b = basis ? 1 : 0;
    if (sys.size() >= detail::kLpRowLimit)
      throw ResourceLimitError("too many constraint rows for the LP oracle");
    c.hist.set(sys.size());
    sys.push_back(std::move(c));
    int i = m.k - 1;
    while (i >= 0 && s[i] == n - m.k + 1 + i) --i;
    if (i < 0) break;
    ++s[i];
    for (int p = i + 1; p < m.k; ++p) s[p] = s[p - 1] + 1;
  }

  std::vector<std::vector<LinCons>> stages;
  std::vector<int> order;  // variable eliminated at each stage
  std::vector<bool> done(n, false);
  LpWitness out;

  for (int step = 0; step < n; ++step) {
    // Pick the remaining variable with the fewest positive*negative products.
    int best = -1;
    long long best_cost = -1;
    for (int v = 0; v < n; ++v) {
      if (done[v]) continue;
      long long pos = 0, neg = 0;
      for (const LinCons& c : sys) {
        if (c.a[v] > 0) ++pos;
        else if (c.a[v] < 0) ++neg;
      }
      long long cost = pos * neg;
      if (best == -1 || cost < best_cost) {
        best = v;
        best_cost = cost;
      }
    }
    stages.push_back(sys);
    order.push_back(best);
    done[best] = true;

    std::vector<LinCons> next;
    std::vector<const LinCons*> pos, neg;
    for (const LinCons& c : sys) {
      if (c.a[best] > 0) pos.push_back(&c);
      else if (c.a[best] < 0) neg.push_back(&c);
      else next.push_back(c);
    }
    for (const LinCons* p : pos)
      for (const LinCons* q : neg) {
        LinCons c;
        c.hist = p->hist | q->hist;
        if (c.hist.count() > static_cast<std::size_t>(step) + 2) continue;  // Kohler
        c.a.resize(n);
        const Int cp = -q->a[best];  // > 0
        const Int cq = p->a[best];   // > 0
        for (int i = 0; i < n; ++i) c.a[i] = cp * p->a[i] + cq * q->a[i];
        c.b = cp * p->b + cq * q->b;
        next.push_back(std::move(c));
        if (next.size() > stage_cap)
          throw ResourceLimitError("Fourier-Motzkin stage exceeded the constraint cap");
      }

    // Normalize, drop satisfied constant rows, detect contradictions, dedup.
    std::map<std::string, std::pair<LinCons, Rational>> dedup;
    for (LinCons& c : next) {
      bool allzero =
          std::all_of(c.a.begin(), c.a.end(), [](const Int& v) { return v == 0; });
      if (allzero) {
        if (c.b > 0) {
          out.feasible = false;
          out.contradiction = c.b;
          return out;
        }
        continue;
      }
      detail::normalize_cons(c);
      std::string key = detail::cons_key(c);
      auto it = dedup.find(key);
      if (it == dedup.end()) dedup.emplace(key, std::make_pair(c, c.b));
      else if (c.b > it->second.second) it->second = {c, c.b};
    }
    sys.clear();
    for (auto& [key, pr] : dedup) sys.push_back(std::move(pr.first));
  }

  // Feasible: back-substitute in reverse elimination order.
  out.feasible = true;
  out.weights.assign(n, 0);
  std::vector<bool> assigned(n, false);
  for (int step = n - 1; step >= 0; --step) {
    const int v = order[step];
    std::optional<Rational> lb, ub;
    for (const LinCons& c : stages[step]) {
      if (c.a[v] == 0) continue;
      Rational rest = c.b;
      for (int i = 0; i < n; ++i)
        if (i != v && assigned[i]) rest -= c.a[i] * out.weights[i];
      Rational bound = rest / c.a[v];
      if (c.a[v] > 0) {
        if (!lb || bound > *lb) lb = bound;
      } else {
        if (!ub || bound < *ub) ub = bound;
      }
    }
    if (lb && ub) out.weights[v] = (*lb + *ub) / 2;
    else if (lb) out.weights[v] = *lb;
    else if (ub) out.weights[v] = *ub;
    else out.weights[v] = 0;
    assigned[v] = true;
  }
  return out;
}

inline LpWitness lp_threshold_oracle(const DefiningBasis& m,
                                     std::size_t stage_cap = 2'000'000) {
  return lp_threshold_oracle(explicit_from_defining(m), stage_cap);
}

/// l bases and l size-k non-bases sharing one sorted concatenation.
struct AsummabilityViolation {
  int ell = 2;
  std::vector<SubsetWord> bases;
  std::vector<SubsetWord> non_bases;
};

namespace detail {

/// Positions j, j+l, j+2l, ... of the merged word, one part per residue.
inline std::vector<std::vector<int>> interleave_split(const std::vector<int>& merged, int ell) {
  std::vector<std::vector<int>> parts(ell);
  for (std::size_t i = 0; i < merged.size(); ++i)
    parts[i % ell].push_back(merged[i]);
  return parts;
}

inline std::vector<std::vector<int>> non_bases_lex(const DefiningBasis& m, std::size_t cap) {
  if (binomial(m.n(), m.rank()) - count_bases(m) > Int(cap))
    throw ResourceLimitError("non-basis count exceeds cap");
  std::vector<std::vector<int>> out;
  const int n = m.n(), k = m.rank();
  std::vector<int> s(k);
  for (int i = 0; i < k; ++i) s[i] = i + 1;
  if (k == 0) return out;
  while (true) {
    bool basis = true;
    for (int i = 0; i < k; ++i)
      if (s[i] > m.t[i]) {
        basis = false;
        break;
      }
    if (!basis) out.push_back(s);
    int i = k - 1;
    while (i >= 0 && s[i] == n - k + 1 + i) --i;
    if (i < 0) break;
    ++s[i];
    for (int p = i + 1; p < k; ++p) s[p] = s[p - 1] + 1;
  }
  return out;
}

}  // namespace detail

/// Shifted fast path: non-basis l-tuples D_1 <= ... <= D_l (lexicographic
/// scan, first hit returned) whose sorted concatenation is componentwise
/// below T repeated l times; the matching bases come out of the interleaved
/// split of that concatenation.  l in {2, 3}.
inline std::optional<AsummabilityViolation> asummability_oracle(const DefiningBasis& m, int ell,
                                                                std::size_t cap = 200'000) {
  if (ell != 2 && ell != 3) throw UnsupportedError("asummability oracle handles l in {2,3} only");
  const int k = m.rank();
  if (k == 0) return std::nullopt;
  std::vector<int> bound;  // T repeated l times, sorted
  for (int i = 0; i < k; ++i)
    for (int r = 0; r < ell; ++r) bound.push_back(m.t[i]);
  std::vector<std::vector<int>> nb = detail::non_bases_lex(m, cap);

  auto below = [&](const std::vector<int>& merged) {
    for (std::size_t i = 0; i < merged.size(); ++i)
      if (merged[i] > bound[i]) return false;
    return true;
  };
  std::optional<AsummabilityViolation> found;
  auto make = [&](const std::vector<const std::vector<int>*>& ds) {
    std::vector<int> merged;
    for (const auto* d : ds) merged.insert(merged.end(), d->begin(), d->end());
    std::sort(merged.begin(), merged.end());
    if (!below(merged)) return false;
    AsummabilityViolation v;
    v.ell = ell;
    for (const auto& part : detail::interleave_split(merged, ell)) {
      SubsetWord b(part, m.n());
      if (!is_basis(m, b))
        throw VerificationFailedError("interleaved split produced a non-basis part");
      v.bases.push_back(std::move(b));
    }
    for (const auto* d : ds) v.non_bases.emplace_back(*d, m.n());
    found = std::move(v);
    return true;
  };
  for (std::size_t i = 0; i < nb.size(); ++i)
    for (std::size_t j = i; j < nb.size(); ++j) {
      if (ell == 2) {
        if (make({&nb[i], &nb[j]})) return found;
      } else {
        for (std::size_t l2 = j; l2 < nb.size(); ++l2)
          if (make({&nb[i], &nb[j], &nb[l2]})) return found;
      }
    }
  return std::nullopt;
}

/// General path for an explicit matroid: hash the sorted concatenations of
/// basis l-tuples, then scan non-basis l-tuples lexicographically.
inline std::optional<AsummabilityViolation> asummability_oracle(const ExplicitMatroid& m, int ell,
                                                                std::size_t cap = 200'000) {
  if (ell != 2 && ell != 3) throw UnsupportedError("asummability oracle handles l in {2,3} only");
  std::unordered_set<std::string> basis_keys;
  for (const auto& b : m.bases) basis_keys.insert(detail::subset_key(b));

  std::vector<std::vector<int>> nb;
  std::vector<int> s(m.k);
  for (int i = 0; i < m.k; ++i) s[i] = i + 1;
  if (m.k == 0) return std::nullopt;
  while (true) {
    if (!basis_keys.count(detail::subset_key(s))) nb.push_back(s);
    int i = m.k - 1;
    while (i >= 0 && s[i] == m.n - m.k + 1 + i) --i;
    if (i < 0) break;
    ++s[i];
    for (int p = i + 1; p < m.k; ++p) s[p] = s[p - 1] + 1;
  }

  // Hash basis tuples by concatenation, keeping the lexicographically first.
  std::unordered_map<std::string, std::vector<std::vector<int>>> by_concat;
  std::size_t tuples = 0;
  auto add_tuple = [&](const std::vector<const std::vector<int>*>& bs) {
    if (++tuples > cap) throw ResourceLimitError("basis tuple count exceeds cap");
    std::vector<int> merged;
    for (const auto* b : bs) merged.insert(merged.end(), b->begin(), b->end());
    std::sort(merged.begin(), merged.end());
    std::string key = detail::subset_key(merged);
    if (!by_concat.count(key)) {
      std::vector<std::vector<int>> t;
      for (const auto* b : bs) t.push_back(*b);
      by_concat.emplace(std::move(key), std::move(t));
    }
  };
  for (std::size_t i = 0; i < m.bases.size(); ++i)
    for (std::size_t j = i; j < m.bases.size(); ++j) {
      if (ell == 2) add_tuple({&m.bases[i], &m.bases[j]});
      else
        for (std::size_t l2 = j; l2 < m.bases.size(); ++l2)
          add_tuple({&m.bases[i], &m.bases[j], &m.bases[l2]});
    }

  auto check = [&](const std::vector<const std::vector<int>*>& ds)
      -> std::optional<AsummabilityViolation> {
    std::vector<int> merged;
    for (const auto* d : ds) merged.insert(merged.end(), d->begin(), d->end());
    std::sort(merged.begin(), merged.end());
    auto it = by_concat.find(detail::subset_key(merged));
    if (it == by_concat.end()) return std::nullopt;
    AsummabilityViolation v;
    v.ell = ell;
    for (const auto& b : it->second) v.bases.emplace_back(b, m.n);
    for (const auto* d : ds) v.non_bases.emplace_back(*d, m.n);
    return v;
  };
  for (std::size_t i = 0; i < nb.size(); ++i)
    for (std::size_t j = i; j < nb.size(); ++j) {
      if (ell == 2) {
        if (auto v = check({&nb[i], &nb[j]})) return v;
      } else {
        for (std::size_t l2 = j; l2 < nb.size(); ++l2)
          if (auto v = check({&nb[i], &nb[j], &nb[l2]})) return v;
      }
    }
  return std::nullopt;
}

/// Minimality sweep over all subsets of size <= k+1: dependent with every
/// one-element deletion independent.  Sorted by (size, lexicographic).
inline std::vector<SubsetWord> circuits_bruteforce(const ExplicitMatroid& m) {
  std::vector<Int> basis_masks;
  for (const auto& b : m.bases) {
    Int mask = 0;
    for (int e : b) boost::multiprecision::bit_set(mask, e - 1);
    basis_masks.push_back(mask);
  }
  auto independent = [&](const Int& mask) {
    for (const Int& b : basis_masks)
      if ((mask & b) == mask) return true;
    return false;
  };
  std::vector<SubsetWord> out;
  std::vector<int> cur;
  std::function<void(int, Int)> rec = [&](int lo, Int mask) {
    if (!cur.empty()) {
      if (!independent(mask)) {
        // dependent; circuit iff every facet is independent
        bool circuit = true;
        for (int e : cur) {
          Int facet = mask;
          boost::multiprecision::bit_unset(facet, e - 1);
          if (!independent(facet)) {
            circuit = false;
            break;
          }
        }
        if (circuit) out.emplace_back(cur, m.n);
        return;  // supersets of a dependent set are never circuits
      }
      if (static_cast<int>(cur.size()) == m.k + 1) return;
    }
    for (int e = lo; e <= m.n; ++e) {
      cur.push_back(e);
      Int next = mask;
      boost::multiprecision::bit_set(next, e - 1);
      rec(e + 1, next);
      cur.pop_back();
    }
  };
  rec(1, Int(0));
  std::sort(out.begin(), out.end(), [](const SubsetWord& a, const SubsetWord& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return out;
}

inline std::vector<SubsetWord> circuits_bruteforce(const DefiningBasis& m,
                                                   std::size_t cap = 5'000'000) {
  return circuits_bruteforce(explicit_from_defining(m, cap));
}

/// Binary test: the symmetric difference of any two distinct circuits must be
/// a disjoint union of circuits (searched with backtracking, memoized on the
/// remaining element mask).
inline bool binary_symdiff_oracle(const ExplicitMatroid& m) {
  std::vector<SubsetWord> cs = circuits_bruteforce(m);
  std::vector<Int> masks;
  for (const auto& c : cs) masks.push_back(c.mask());
  std::unordered_map<std::string, bool> memo;
  std::function<bool(const Int&)> partitionable = [&](const Int& rem) -> bool {
    if (rem == 0) return true;
    std::string key = rem.str(16);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    bool ok = false;
    for (const Int& c : masks)
      if ((c & rem) == c && partitionable(rem ^ c)) {
        ok = true;
        break;
      }
    memo.emplace(std::move(key), ok);
    return ok;
  };
  for (std::size_t i = 0; i < masks.size(); ++i)
    for (std::size_t j = i + 1; j < masks.size(); ++j)
      if (!partitionable(masks[i] ^ masks[j])) return false;
  return true;
}

inline bool binary_symdiff_oracle(const DefiningBasis& m, std::size_t cap = 5'000'000) {
  return binary_symdiff_oracle(explicit_from_defining(m, cap));
}

}  // namespace matroid
