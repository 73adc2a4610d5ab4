#pragma once

#include <array>
#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "matroid/threshold.hpp"

namespace matroid {

/// Closed form for the number of non-empty threshold defining bases on [n].
inline Int threshold_count_formula(int n) {
  return binomial(n + 1, 2) + binomial(n + 1, 4) + binomial(n + 1, 6) + binomial(n - 1, 6);
}

/// The seven mutually exclusive shapes of a threshold T, tallied separately
/// so each count can be matched against its own binomial:
///   0: one block                                   C(n+1,2)
///   1: two blocks                                  C(n+1,4)
///   2: three blocks, 1 in T                        C(n,5)
///   3: three blocks, 1 not in T, 2nd block = 1     C(n-1,5)
///   4: three blocks, 1 not in T, 2nd gap = 1       C(n-2,5)
///   5: four blocks, 1 in T, 3rd block = 1          C(n-1,6)
///   6: four blocks, 1 in T, 3rd block > 1, gap = 1 C(n-2,6)
/// Returns -1 for non-threshold shapes.
inline int proof_case(const DefiningBasis& m) {
  if (m.rank() == 0) return -1;
  BlockDecomposition bd = block_decomposition(m.t);
  const std::size_t ell = bd.blocks.size();
  const bool one_in = m.t.contains(1);
  if (ell == 1) return 0;
  if (ell == 2) return 1;
  if (ell == 3) {
    if (one_in) return 2;
    if (bd.blocks[1].size() == 1) return 3;
    if (bd.gaps[1].size() == 1) return 4;
    return -1;
  }
  if (ell == 4 && one_in) {
    if (bd.blocks[2].size() == 1) return 5;
    // gaps[1] separates blocks 2 and 3 when 1 is in T
    if (bd.gaps[1].size() == 1) return 6;
    return -1;
  }
  return -1;
}

inline std::array<Int, 7> proof_case_formulas(int n) {
  return {binomial(n + 1, 2), binomial(n + 1, 4), binomial(n, 5),     binomial(n - 1, 5),
          binomial(n - 2, 5), binomial(n - 1, 6), binomial(n - 2, 6)};
}

struct CensusReport {
  int n = 0;
  Int shifted_classes;    // 2^n, the empty class included
  Int non_empty_classes;  // 2^n - 1
  Int threshold_count;
  Int non_threshold_count;
  std::map<CaseTag, Int> by_tag;      // threshold verdicts only
  std::array<Int, 7> proof_cases{};   // see proof_case
  std::vector<std::string> offenders;  // formatted non-threshold T, up to a cap
  bool offenders_truncated = false;
  Rational ratio;  // threshold_count / 2^n; the empty class stays in the denominator
};

/// Exhaustive classifier sweep over every non-empty subset of [n].
inline CensusReport census(int n, std::size_t offender_cap = 32) {
  if (n < 1 || n > 62) throw std::invalid_argument("census needs 1 <= n <= 62");
  CensusReport r;
  r.n = n;
  r.shifted_classes = Int(1) << n;
  r.non_empty_classes = r.shifted_classes - 1;
  r.threshold_count = 0;
  r.non_threshold_count = 0;
  for (unsigned long long mask = 1; mask < (1ULL << n); ++mask) {
    std::vector<int> elems;
    for (int e = 1; e <= n; ++e)
      if (mask & (1ULL << (e - 1))) elems.push_back(e);
    DefiningBasis m(std::move(elems), n);
    ThresholdClassification cls = classify(m);
    if (cls.verdict == Verdict::Threshold) {
      ++r.threshold_count;
      ++r.by_tag[cls.tag];
      int pc = proof_case(m);
      if (pc < 0) throw VerificationFailedError("threshold T outside the seven-case split");
      ++r.proof_cases[pc];
    } else {
      ++r.non_threshold_count;
      if (r.offenders.size() < offender_cap) r.offenders.push_back(format_subset_word(m.t));
      else r.offenders_truncated = true;
    }
  }
  r.ratio = Rational(r.threshold_count, r.shifted_classes);
  return r;
}

/// Rounded decimal expansion of a non-negative rational, `digits` places.
inline std::string to_decimal_string(const Rational& r, int digits) {
  Int scale = 1;
  for (int i = 0; i < digits; ++i) scale *= 10;
  Int scaled = (numerator(r) * scale * 2 + denominator(r)) / (2 * denominator(r));
  Int whole = scaled / scale;
  std::string frac = Int(scaled % scale).str();
  frac.insert(frac.begin(), digits - frac.size(), '0');
  return whole.str() + "." + frac;
}

/// The threshold share among non-empty classes as a percentage, two decimals.
inline std::string percent_non_empty(const CensusReport& r) {
  return to_decimal_string(Rational(r.threshold_count * 100, r.non_empty_classes), 2);
}

/// Formula-based series F(n)/2^n for n = 1..n_max.
inline std::vector<std::pair<int, Rational>> ratio_series(int n_max) {
  std::vector<std::pair<int, Rational>> out;
  for (int n = 1; n <= n_max; ++n)
    out.emplace_back(n, Rational(threshold_count_formula(n), Int(1) << n));
  return out;
}

/// CSV columns: n, numerator, denominator, decimal to 6 places.
inline std::string ratio_series_csv(const std::vector<std::pair<int, Rational>>& series) {
  std::ostringstream os;
  os << "n,numerator,denominator,decimal\n";
  for (const auto& [n, r] : series)
    os << n << ',' << numerator(r).str() << ',' << denominator(r).str() << ','
       << to_decimal_string(r, 6) << "\n";
  return os.str();
}

}  // namespace matroid
