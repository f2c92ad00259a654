#include <doctest.h>

#include <algorithm>

#include "dscsib/error.hpp"
#include "dscsib/finite_oracle.hpp"

using namespace dscsib;

namespace {

// The finite shadow of the component matching rule: sorted descending
// source sizes match injectively into targets of at least their size.
bool greedy_multiset_rule(std::vector<std::uint64_t> p, std::vector<std::uint64_t> q) {
  std::sort(p.rbegin(), p.rend());
  std::sort(q.rbegin(), q.rend());
  if (p.size() > q.size()) return false;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] > q[i]) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("brute embedding basics") {
  CHECK(brute_embeds(FinitePoset({2, 2}), FinitePoset({3, 2})).embeds);
  CHECK_FALSE(brute_embeds(FinitePoset({3}), FinitePoset({2, 2})).embeds);
  CHECK_FALSE(brute_embeds(FinitePoset({1, 1, 1}), FinitePoset({1, 2})).embeds);
}

TEST_CASE("witness maps preserve the order structure") {
  const FinitePoset p({2, 2});
  const FinitePoset q({3, 2});
  const auto result = brute_embeds(p, q);
  REQUIRE(result.embeds);
  REQUIRE(result.witness.has_value());
  const ElementMap& m = *result.witness;
  REQUIRE(m.size() == p.total_size());
  for (std::size_t x = 0; x < m.size(); ++x) {
    for (std::size_t y = 0; y < m.size(); ++y) {
      if (x == y) continue;
      CHECK(m[x] != m[y]);
      const auto [cx, px] = p.locate(x);
      const auto [cy, py] = p.locate(y);
      const auto [dx, qx] = q.locate(m[x]);
      const auto [dy, qy] = q.locate(m[y]);
      const bool comparable_p = cx == cy;
      const bool comparable_q = dx == dy;
      CHECK(comparable_p == comparable_q);
      if (comparable_p) CHECK((px < py) == (qx < qy));
    }
  }
}

TEST_CASE("brute isomorphism is multiset equality") {
  CHECK(brute_iso(FinitePoset({2, 3}), FinitePoset({3, 2})));
  CHECK_FALSE(brute_iso(FinitePoset({2, 2}), FinitePoset({4})));
  CHECK(brute_iso(FinitePoset({1, 2, 2}), FinitePoset({1, 2, 2})));
}

TEST_CASE("isomorphism agrees with bijective embedding search") {
  const auto multisets = all_chain_multisets(6);
  for (const auto& a : multisets) {
    for (const auto& b : multisets) {
      const FinitePoset p(a), q(b);
      // for equal-size unions of chains, an embedding is a bijection and
      // hence an isomorphism
      const bool bijective = p.total_size() == q.total_size() &&
                             brute_embeds(p, q).embeds;
      CHECK(bijective == brute_iso(p, q));
    }
  }
}

TEST_CASE("brute embedding agrees with the greedy multiset rule up to size 7") {
  const auto multisets = all_chain_multisets(7);
  std::uint64_t pairs = 0;
  for (const auto& a : multisets) {
    for (const auto& b : multisets) {
      ++pairs;
      CHECK(brute_embeds(FinitePoset(a), FinitePoset(b)).embeds ==
            greedy_multiset_rule(a, b));
    }
  }
  CHECK(pairs == multisets.size() * multisets.size());
}

TEST_CASE("brute embedding is reflexive and transitive on small posets") {
  const auto multisets = all_chain_multisets(5);
  for (const auto& a : multisets) {
    CHECK(brute_embeds(FinitePoset(a), FinitePoset(a)).embeds);
  }
  for (const auto& a : multisets) {
    for (const auto& b : multisets) {
      if (!brute_embeds(FinitePoset(a), FinitePoset(b)).embeds) continue;
      for (const auto& c : multisets) {
        if (brute_embeds(FinitePoset(b), FinitePoset(c)).embeds) {
          CHECK(brute_embeds(FinitePoset(a), FinitePoset(c)).embeds);
        }
      }
    }
  }
}

TEST_CASE("brute isomorphism is an equivalence relation") {
  const auto multisets = all_chain_multisets(5);
  for (const auto& a : multisets) {
    CHECK(brute_iso(FinitePoset(a), FinitePoset(a)));
    for (const auto& b : multisets) {
      CHECK(brute_iso(FinitePoset(a), FinitePoset(b)) ==
            brute_iso(FinitePoset(b), FinitePoset(a)));
      if (!brute_iso(FinitePoset(a), FinitePoset(b))) continue;
      for (const auto& c : multisets) {
        if (brute_iso(FinitePoset(b), FinitePoset(c))) {
          CHECK(brute_iso(FinitePoset(a), FinitePoset(c)));
        }
      }
    }
  }
}

TEST_CASE("mutual embedding implies isomorphism, exhaustively at cap 5") {
  const auto report = check_mutual_embed_implies_iso(5);
  CHECK(report.pairs_checked > 0);
  CHECK(report.mutual_pairs > 0);
  CHECK(report.counterexamples.empty());
}

TEST_CASE("induced component maps are well defined and injective") {
  CHECK(induced_injection_check(FinitePoset({2, 2}), FinitePoset({3, 2})));
  CHECK(induced_injection_check(FinitePoset({1}), FinitePoset({5})));
  CHECK(induced_injection_check(FinitePoset({2, 2}), FinitePoset({5, 5, 5}, 15)));
}

TEST_CASE("size caps") {
  CHECK_THROWS_WITH_AS(FinitePoset({9, 9}), doctest::Contains("exceeds"), Error);
  CHECK_NOTHROW(FinitePoset({9, 9}, 18));
}
