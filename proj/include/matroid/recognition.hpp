#pragma once

#include <algorithm>
#include <numeric>
#include <optional>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "matroid/shifted.hpp"

namespace matroid {

/// A rank-k matroid on [n] presented by its list of bases (each sorted).
/// Construct through validate_bases; recognition results on unvalidated
/// input are undefined.
struct ExplicitMatroid {
  int n = 0;
  int k = 0;
  std::vector<std::vector<int>> bases;
};

namespace detail {
/// Canonical byte key of a sorted subset, for hashed membership (n <= 255).
inline std::string subset_key(const std::vector<int>& sorted) {
  std::string s;
  s.reserve(sorted.size());
  for (int e : sorted) s.push_back(static_cast<char>(e));
  return s;
}
}  // namespace detail

/// Checks the basis-exchange axiom over all pairs; O(m^2 k^2) with hashed
/// membership.  Throws NotAMatroidError naming a violating (B1, B2, b1).
inline ExplicitMatroid validate_bases(std::vector<std::vector<int>> bases, int n = 0) {
  if (bases.empty()) throw NotAMatroidError("empty bases list");
  const std::size_t k = bases[0].size();
  int max_elem = 0;
  std::unordered_set<std::string> seen;
  for (auto& b : bases) {
    if (b.size() != k) throw NotAMatroidError("ragged bases list");
    std::sort(b.begin(), b.end());
    for (std::size_t i = 0; i < b.size(); ++i) {
      if (b[i] < 1) throw NotAMatroidError("element labels must be >= 1");
      if (i > 0 && b[i] == b[i - 1]) throw NotAMatroidError("basis with repeated element");
      max_elem = std::max(max_elem, b[i]);
    }
    if (!seen.insert(detail::subset_key(b)).second)
      throw NotAMatroidError("duplicate basis in list");
  }
  if (n == 0) n = max_elem;
  if (max_elem > n) throw NotAMatroidError("element label exceeds ground-set size");
  if (n > 255) throw ResourceLimitError("ground sets above 255 elements unsupported");

  for (std::size_t a = 0; a < bases.size(); ++a) {
    for (std::size_t b = 0; b < bases.size(); ++b) {
      if (a == b) continue;
      const auto& b1 = bases[a];
      const auto& b2 = bases[b];
      for (int e1 : b1) {
        if (std::binary_search(b2.begin(), b2.end(), e1)) continue;
        bool exchanged = false;
        std::vector<int> cand(b1);
        cand.erase(std::find(cand.begin(), cand.end(), e1));
        cand.push_back(0);
        for (int e2 : b2) {
          if (std::binary_search(b1.begin(), b1.end(), e2)) continue;
          cand.back() = e2;
          std::vector<int> s(cand);
          std::sort(s.begin(), s.end());
          if (seen.count(detail::subset_key(s))) {
            exchanged = true;
            break;
          }
        }
        if (!exchanged) {
          std::ostringstream os;
          os << "basis-exchange fails for B1={";
          for (int e : b1) os << ' ' << e;
          os << " }, B2={";
          for (int e : b2) os << ' ' << e;
          os << " }, b1=" << e1;
          throw NotAMatroidError(os.str());
        }
      }
    }
  }
  return ExplicitMatroid{n, static_cast<int>(k), std::move(bases)};
}

/// Open/closed neighborhoods of each element as hashed (k-1)-subset
/// collections, plus the comparison matrix of the vicinal preorder
/// (i precedes j iff N[i] contains N(j)).
struct VicinalData {
  std::vector<std::unordered_set<std::string>> open;    // N(i), index 0 unused
  std::vector<std::unordered_set<std::string>> closed;  // N[i]
  std::vector<std::vector<bool>> leq;                   // leq[i][j] <=> i precedes j

  bool precedes(int i, int j) const { return leq[i][j]; }
};

inline VicinalData vicinal_preorder(const ExplicitMatroid& m) {
  VicinalData v;
  v.open.assign(m.n + 1, {});
  v.closed.assign(m.n + 1, {});
  for (const auto& b : m.bases) {
    for (std::size_t drop = 0; drop < b.size(); ++drop) {
      std::vector<int> facet;
      facet.reserve(b.size() - 1);
      for (std::size_t i = 0; i < b.size(); ++i)
        if (i != drop) facet.push_back(b[i]);
      std::string key = detail::subset_key(facet);
      v.open[b[drop]].insert(key);
      for (int i : b) v.closed[i].insert(key);
    }
  }
  v.leq.assign(m.n + 1, std::vector<bool>(m.n + 1, false));
  for (int i = 1; i <= m.n; ++i) {
    for (int j = 1; j <= m.n; ++j) {
      bool ok = true;
      for (const auto& key : v.open[j])
        if (!v.closed[i].count(key)) {
          ok = false;
          break;
        }
      v.leq[i][j] = ok;
    }
  }
  return v;
}

/// If the vicinal preorder is total, an order-preserving arrangement of the
/// ground set (most dominant first, ties broken by input label order);
/// otherwise the first incomparable pair as a witness.
struct ShiftednessResult {
  std::optional<std::vector<int>> order;
  std::pair<int, int> incomparable{0, 0};
};

inline ShiftednessResult is_shifted(const ExplicitMatroid& m, const VicinalData& v) {
  ShiftednessResult r;
  for (int i = 1; i <= m.n; ++i)
    for (int j = i + 1; j <= m.n; ++j)
      if (!v.precedes(i, j) && !v.precedes(j, i)) {
        r.incomparable = {i, j};
        return r;
      }
  // Total preorder: sort by how many elements each one dominates.
  std::vector<int> score(m.n + 1, 0);
  for (int i = 1; i <= m.n; ++i)
    for (int j = 1; j <= m.n; ++j)
      if (j != i && v.precedes(i, j)) ++score[i];
  std::vector<int> order(m.n);
  std::iota(order.begin(), order.end(), 1);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return score[a] > score[b]; });
  r.order = std::move(order);
  return r;
}

inline ShiftednessResult is_shifted(const ExplicitMatroid& m) {
  return is_shifted(m, vicinal_preorder(m));
}

struct Canonicalization {
  DefiningBasis basis;
  std::vector<int> new_label;  // new_label[e] in 1..n for each old element e
};

namespace detail {
/// One relabeling attempt: T = componentwise max of the relabeled bases,
/// verified by per-basis comparison plus the DP count (which guarantees the
/// ideal of T is exactly the given basis set).
inline std::optional<Canonicalization> try_order(const ExplicitMatroid& m,
                                                 const std::vector<int>& order) {
  std::vector<int> new_label(m.n + 1, 0);
  for (int p = 0; p < m.n; ++p) new_label[order[p]] = p + 1;
  std::vector<int> tmax(m.k, 0);
  std::vector<std::vector<int>> relabeled;
  relabeled.reserve(m.bases.size());
  for (const auto& b : m.bases) {
    std::vector<int> r(m.k);
    for (int i = 0; i < m.k; ++i) r[i] = new_label[b[i]];
    std::sort(r.begin(), r.end());
    for (int i = 0; i < m.k; ++i) tmax[i] = std::max(tmax[i], r[i]);
    relabeled.push_back(std::move(r));
  }
  DefiningBasis t(tmax, m.n);
  for (const auto& r : relabeled)
    if (!componentwise_leq(SubsetWord(r, m.n), t.t)) return std::nullopt;
  if (count_bases(t) != static_cast<long long>(m.bases.size())) return std::nullopt;
  return Canonicalization{std::move(t), std::move(new_label)};
}
}  // namespace detail

/// Relabels by the vicinal order and takes T as the componentwise maximum of
/// the relabeled bases.  Tied elements are interchangeable; if the default
/// tie-breaking fails the DP-count verification, permutations of tie classes
/// are retried up to a global bound.
inline Canonicalization canonicalize(const ExplicitMatroid& m,
                                     std::size_t max_attempts = 10'000) {
  VicinalData v = vicinal_preorder(m);
  ShiftednessResult sr = is_shifted(m, v);
  if (!sr.order)
    throw VerificationFailedError("matroid is not shifted (incomparable pair " +
                                  std::to_string(sr.incomparable.first) + "," +
                                  std::to_string(sr.incomparable.second) + ")");
  std::vector<int> order = *sr.order;
  if (auto c = detail::try_order(m, order)) return *c;

  // Retry over tie-class permutations, bounded.
  std::vector<std::pair<int, int>> classes;  // [begin, end) runs of mutually tied elements
  int begin = 0;
  for (int i = 1; i <= m.n; ++i) {
    if (i == m.n ||
        !(v.precedes(order[i], order[i - 1]) && v.precedes(order[i - 1], order[i]))) {
      classes.push_back({begin, i});
      begin = i;
    }
  }
  std::size_t attempts = 1;
  std::function<std::optional<Canonicalization>(std::size_t)> walk =
      [&](std::size_t ci) -> std::optional<Canonicalization> {
    if (attempts > max_attempts) return std::nullopt;
    if (ci == classes.size()) {
      ++attempts;
      return detail::try_order(m, order);
    }
    auto [lo, hi] = classes[ci];
    std::vector<int> saved(order.begin() + lo, order.begin() + hi);
    std::sort(order.begin() + lo, order.begin() + hi);
    do {
      if (auto c = walk(ci + 1)) return c;
      if (attempts > max_attempts) break;
    } while (std::next_permutation(order.begin() + lo, order.begin() + hi));
    std::copy(saved.begin(), saved.end(), order.begin() + lo);
    return std::nullopt;
  };
  if (auto c = walk(0)) return *c;
  throw VerificationFailedError("no tie-breaking of the vicinal order yields a principal ideal");
}

}  // namespace matroid
