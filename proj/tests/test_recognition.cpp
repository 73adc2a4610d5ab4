#include <algorithm>
#include <catch2/catch_amalgamated.hpp>
#include <random>

#include "matroid/recognition.hpp"

using namespace matroid;

namespace {

std::vector<std::vector<int>> bases_list(const DefiningBasis& m) {
  std::vector<std::vector<int>> out;
  for (const auto& b : enumerate_bases(m)) out.push_back(b.elements());
  return out;
}

/// Relabel a bases list by a permutation perm[old-1] = new.
std::vector<std::vector<int>> relabel(const std::vector<std::vector<int>>& bases,
                                      const std::vector<int>& perm) {
  std::vector<std::vector<int>> out;
  for (const auto& b : bases) {
    std::vector<int> r;
    for (int e : b) r.push_back(perm[e - 1]);
    std::sort(r.begin(), r.end());
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace

TEST_CASE("validate_bases accepts matroids and rejects non-matroids") {
  auto em = validate_bases(bases_list(DefiningBasis({2, 4}, 4)));
  CHECK(em.n == 4);
  CHECK(em.k == 2);
  CHECK(em.bases.size() == 5);

  CHECK_THROWS_AS(validate_bases({}), NotAMatroidError);
  CHECK_THROWS_AS(validate_bases({{1, 2}, {3}}), NotAMatroidError);
  CHECK_THROWS_AS(validate_bases({{1, 2}, {1, 2}}), NotAMatroidError);
  CHECK_THROWS_AS(validate_bases({{1, 1}}), NotAMatroidError);
  // {12, 34} fails exchange on b1=1
  CHECK_THROWS_WITH(validate_bases({{1, 2}, {3, 4}}),
                    Catch::Matchers::ContainsSubstring("b1=1"));
}

TEST_CASE("two parallel classes are not shifted") {
  auto em = validate_bases({{1, 3}, {1, 4}, {2, 3}, {2, 4}});
  ShiftednessResult r = is_shifted(em);
  CHECK_FALSE(r.order.has_value());
  auto [i, j] = r.incomparable;
  // the incomparable pair straddles the two parallel classes
  CHECK(((i <= 2) != (j <= 2)));
  CHECK_THROWS_AS(canonicalize(em), VerificationFailedError);
}

TEST_CASE("vicinal preorder is total on shifted input") {
  auto em = validate_bases(bases_list(DefiningBasis({2, 5, 6, 8}, 8)));
  ShiftednessResult r = is_shifted(em);
  REQUIRE(r.order.has_value());
  // identity labeling is already dominance-ordered
  CHECK(*r.order == std::vector<int>{1, 2, 3, 4, 5, 6, 7, 8});
}

TEST_CASE("canonicalization recovers the defining basis after relabeling") {
  std::mt19937 rng(7031);
  for (int trial = 0; trial < 60; ++trial) {
    int n = 2 + static_cast<int>(rng() % 6);
    std::vector<int> elems;
    for (int e = 1; e <= n; ++e)
      if (rng() % 2) elems.push_back(e);
    if (elems.empty()) continue;
    DefiningBasis m(elems, n);

    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 1);
    std::shuffle(perm.begin(), perm.end(), rng);

    auto em = validate_bases(relabel(bases_list(m), perm), n);
    Canonicalization c = canonicalize(em);
    CHECK(c.basis == m);
    // the relabeling must send each original basis into the ideal of T
    for (const auto& b : em.bases) {
      std::vector<int> r;
      for (int e : b) r.push_back(c.new_label[e]);
      std::sort(r.begin(), r.end());
      CHECK(componentwise_leq(SubsetWord(r, n), c.basis.t));
    }
  }
}

TEST_CASE("canonicalization via complements of bases") {
  // the complements of the bases of <2 5 6 8> are again the bases of a
  // shifted matroid, recognized without any reference to duality
  std::vector<std::vector<int>> comp;
  for (const auto& b : enumerate_bases(DefiningBasis({2, 5, 6, 8}, 8)))
    comp.push_back(b.complement().elements());
  Canonicalization c = canonicalize(validate_bases(comp, 8));
  CHECK(format_defining_basis(c.basis) == "n=8; T=2 5 6 8");
}

TEST_CASE("loops keep their place through canonicalization") {
  // element 4 never appears: a loop, sent to the bottom of the order
  auto em = validate_bases({{1, 2}, {1, 3}, {2, 3}}, 4);
  Canonicalization c = canonicalize(em);
  CHECK(format_defining_basis(c.basis) == "n=4; T=2 3");
  CHECK(c.new_label[4] == 4);
}
