#include <doctest.h>

#include <algorithm>
#include <vector>

#include "dscsib/error.hpp"
#include "dscsib/ordertype.hpp"

using namespace dscsib;

namespace {

// Independent order oracle for normal forms below omega^4 with small
// coefficients: evaluating the form as a polynomial at a base exceeding
// every coefficient and tail is order-faithful.
std::uint64_t polynomial_value(const CnfOrdinal& o) {
  constexpr std::uint64_t base = 1000;
  std::uint64_t value = 0;
  for (const CnfTerm& t : o.terms()) {
    std::uint64_t power = 1;
    for (std::uint64_t e = 0; e < t.exp; ++e) power *= base;
    value += power * t.coef;
  }
  return value + o.tail();
}

std::vector<CnfOrdinal> small_cnf_pool() {
  // every normal form with exponents <= 3, coefficients <= 3, tails <= 3
  std::vector<CnfOrdinal> pool;
  std::vector<std::vector<CnfTerm>> term_lists = {{}};
  for (std::uint64_t e = 3; e >= 1; --e) {
    const std::size_t upto = term_lists.size();
    for (std::size_t i = 0; i < upto; ++i) {
      for (std::uint64_t c = 1; c <= 3; ++c) {
        auto terms = term_lists[i];
        terms.push_back({e, c});
        term_lists.push_back(std::move(terms));
      }
    }
  }
  for (const auto& terms : term_lists) {
    if (terms.empty()) continue;
    for (std::uint64_t tail = 0; tail <= 3; ++tail) {
      pool.emplace_back(terms, tail);
    }
  }
  return pool;
}

std::vector<OrderType> catalog_pool() {
  DeclaredChain r1{"r1", Cardinal::aleph(0), SibCount::exact(SibAtom::one), {"u1"}, {}};
  DeclaredChain r2{"r2", Cardinal::aleph(0), SibCount::exact(SibAtom::one), {}, {}};
  DeclaredChain u1{"u1", Cardinal::aleph(1), SibCount::exact(SibAtom::one), {}, {"r1"}};
  return {fin_chain(1),
          fin_chain(2),
          fin_chain(5),
          ord_chain(CnfOrdinal::omega()),
          ord_chain(CnfOrdinal({{1, 1}}, 1)),
          ord_chain(CnfOrdinal({{2, 1}, {1, 2}}, 0)),
          rev_chain(CnfOrdinal::omega()),
          rev_chain(CnfOrdinal({{1, 1}}, 1)),
          eta_chain(0),
          eta_chain(2),
          OrderType{r1},
          OrderType{r2},
          OrderType{u1}};
}

}  // namespace

TEST_CASE("sizes") {
  CHECK(size(fin_chain(4)) == Cardinal::finite(4));
  CHECK(size(ord_chain(CnfOrdinal::omega())) == Cardinal::aleph(0));
  CHECK(size(eta_chain(0)) == Cardinal::aleph(0));
  CHECK(size(rev_chain(CnfOrdinal::omega())) == Cardinal::aleph(0));
}

TEST_CASE("normal form comparison agrees with the polynomial oracle") {
  const auto pool = small_cnf_pool();
  REQUIRE(pool.size() > 100);
  for (const CnfOrdinal& a : pool) {
    for (const CnfOrdinal& b : pool) {
      const auto lex = a <=> b;
      const auto poly = polynomial_value(a) <=> polynomial_value(b);
      CHECK(lex == poly);
      // embeddability of ordinal chains is exactly this order
      CHECK(chain_embeds(ord_chain(a), ord_chain(b)) == (a <= b));
      CHECK(chain_embeds(rev_chain(a), rev_chain(b)) == (a <= b));
    }
  }
}

TEST_CASE("ordinal addition folds into normal form") {
  const CnfOrdinal w = CnfOrdinal::omega();
  CHECK(w.plus(w) == CnfOrdinal({{1, 2}}, 0));
  // left parts below the right head are absorbed
  CHECK(w.plus(CnfOrdinal({{2, 1}}, 0)) == CnfOrdinal({{2, 1}}, 0));
  CHECK(CnfOrdinal({{2, 1}}, 0).plus(w) == CnfOrdinal({{2, 1}, {1, 1}}, 0));
  CHECK(CnfOrdinal({{1, 1}}, 3).plus(w) == CnfOrdinal({{1, 2}}, 0));
  CHECK(w.plus_finite(2).plus_finite(1) == CnfOrdinal({{1, 1}}, 3));
}

TEST_CASE("chain embedding basics") {
  const OrderType w = ord_chain(CnfOrdinal::omega());
  const OrderType w1 = ord_chain(CnfOrdinal({{1, 1}}, 1));

  CHECK(chain_embeds(fin_chain(3), w));
  CHECK_FALSE(chain_embeds(w1, w));  // the top of w+1 has infinitely many predecessors
  CHECK(chain_embeds(w, w1));
  CHECK(chain_embeds(w, eta_chain(0)));

  // finite chains go anywhere large enough
  CHECK(chain_embeds(fin_chain(3), fin_chain(3)));
  CHECK_FALSE(chain_embeds(fin_chain(4), fin_chain(3)));
  CHECK(chain_embeds(fin_chain(64), rev_chain(CnfOrdinal::omega())));

  // well-orders against reversed well-orders and the dense order
  CHECK_FALSE(chain_embeds(w, rev_chain(CnfOrdinal::omega())));
  CHECK_FALSE(chain_embeds(rev_chain(CnfOrdinal::omega()), w));
  CHECK(chain_embeds(rev_chain(CnfOrdinal::omega()), eta_chain(1)));
  CHECK_FALSE(chain_embeds(eta_chain(0), w));
  CHECK_FALSE(chain_embeds(eta_chain(0), rev_chain(CnfOrdinal({{1, 1}}, 1))));
  CHECK(chain_embeds(eta_chain(2), eta_chain(0)));
  CHECK(chain_embeds(eta_chain(0), eta_chain(2)));
}

TEST_CASE("every countable order embeds in the dense order: midpoint insertion oracle") {
  // insert the finite truncations of an increasing chain into the dyadic
  // rationals of (0, 1) by always picking the midpoint above the last point;
  // exact arithmetic: after n insertions the last point is (2^n - 1) / 2^n
  unsigned __int128 numerator = 0;
  unsigned __int128 denominator = 1;
  int inserted = 0;
  for (int n = 1; n <= 64; ++n) {
    // midpoint of (numerator/denominator, 1)
    const unsigned __int128 mid_num = numerator + denominator;
    const unsigned __int128 mid_den = denominator * 2;
    CHECK(mid_num * denominator > numerator * mid_den);  // strictly above
    CHECK(mid_num < mid_den);                            // still below 1
    numerator = mid_num;
    denominator = mid_den;
    ++inserted;
  }
  CHECK(inserted == 64);
  CHECK(chain_embeds(ord_chain(CnfOrdinal::omega()), eta_chain(0)));
}

TEST_CASE("declared chains relate only as declared") {
  DeclaredChain r1{"r1", Cardinal::aleph(0), SibCount::exact(SibAtom::one), {"u1"}, {}};
  DeclaredChain r2{"r2", Cardinal::aleph(0), SibCount::exact(SibAtom::one), {}, {}};
  DeclaredChain u1{"u1", Cardinal::aleph(1), SibCount::exact(SibAtom::one), {}, {"r1"}};
  const OrderType tr1{r1}, tr2{r2}, tu1{u1};

  CHECK(chain_embeds(tr1, tr1));
  CHECK(chain_embeds(tr1, tu1));   // declared edge, via either side
  CHECK(chain_embeds(fin_chain(9), tr1));  // finite chains always fit
  CHECK_FALSE(chain_embeds(tr1, tr2));
  CHECK_FALSE(chain_embeds(tr2, tr1));
  CHECK_FALSE(chain_embeds(tu1, tr1));
  CHECK_FALSE(chain_embeds(ord_chain(CnfOrdinal::omega()), tr1));
  CHECK_FALSE(chain_embeds(tr1, eta_chain(0)));
}

TEST_CASE("chain embedding is a quasi-order on the catalog pool") {
  const auto pool = catalog_pool();
  for (const OrderType& a : pool) {
    CHECK(chain_embeds(a, a));
    for (const OrderType& b : pool) {
      for (const OrderType& c : pool) {
        if (chain_embeds(a, b) && chain_embeds(b, c)) CHECK(chain_embeds(a, c));
      }
    }
  }
}

TEST_CASE("embedding restricted to finite chains is size comparison") {
  for (std::uint64_t n = 1; n <= 20; ++n) {
    for (std::uint64_t m = 1; m <= 20; ++m) {
      CHECK(chain_embeds(fin_chain(n), fin_chain(m)) == (n <= m));
    }
  }
}

TEST_CASE("finite chains saturate every infinite target") {
  const auto pool = catalog_pool();
  for (const OrderType& t : pool) {
    if (!size(t).is_infinite()) continue;
    for (std::uint64_t n = 1; n <= 64; n += 7) {
      CHECK(chain_embeds(fin_chain(n), t));
    }
  }
}

TEST_CASE("antisymmetry on ordinal chains") {
  const auto pool = small_cnf_pool();
  for (const CnfOrdinal& a : pool) {
    for (const CnfOrdinal& b : pool) {
      if (chain_embeds(ord_chain(a), ord_chain(b)) &&
          chain_embeds(ord_chain(b), ord_chain(a))) {
        CHECK(a == b);
      }
    }
  }
}

TEST_CASE("sibling numbers of catalog chains") {
  CHECK(chain_sib(fin_chain(5)) == SibCount::exact(SibAtom::one));
  CHECK(chain_sib(eta_chain(0)) == SibCount::exact(SibAtom::continuum));
  CHECK(chain_sib(ord_chain(CnfOrdinal({{2, 1}, {1, 2}}, 0))) ==
        SibCount::exact(SibAtom::one));
  CHECK(chain_sib(rev_chain(CnfOrdinal::omega())) == SibCount::exact(SibAtom::one));
  DeclaredChain s0{"s0", Cardinal::aleph(0), SibCount::exact(SibAtom::aleph0), {}, {}};
  CHECK(chain_sib(OrderType{s0}) == SibCount::exact(SibAtom::aleph0));
}

TEST_CASE("sibling variants") {
  const auto family = sibling_variants(eta_chain(0), 3);
  REQUIRE(family.size() == 3);
  CHECK(family[0] == eta_chain(0));
  CHECK(family[1] == eta_chain(1));
  CHECK(family[2] == eta_chain(2));
  for (const OrderType& a : family) {
    CHECK(chain_embeds(a, eta_chain(0)));
    CHECK(chain_embeds(eta_chain(0), a));
    for (const OrderType& b : family) {
      if (&a != &b) CHECK_FALSE(a == b);
    }
  }

  CHECK(sibling_variants(eta_chain(1), 1) ==
        std::vector<OrderType>{eta_chain(0)});

  CHECK_THROWS_WITH_AS(sibling_variants(fin_chain(2), 1),
                       doctest::Contains("unique sibling"), Error);
  DeclaredChain s0{"s0", Cardinal::aleph(0), SibCount::exact(SibAtom::aleph0), {}, {}};
  CHECK_THROWS_AS(sibling_variants(OrderType{s0}, 2), Error);
}

TEST_CASE("sibling count ranges") {
  const SibCount r = SibCount::range(SibAtom::aleph0, SibAtom::continuum);
  CHECK(r.is_range());
  CHECK(r.to_string() == "Range(Aleph0,Continuum)");
  CHECK_THROWS_AS(SibCount::range(SibAtom::continuum, SibAtom::continuum), Error);
  CHECK(to_string(SibAtom::infinite) == "Infinite");
}

TEST_CASE("canonical order sorts kinds then values") {
  auto pool = catalog_pool();
  std::sort(pool.begin(), pool.end(), canonical_less);
  for (std::size_t i = 1; i < pool.size(); ++i) {
    CHECK(canonical_order(pool[i - 1], pool[i]) < 0);
  }
}

TEST_CASE("chain text") {
  CHECK(to_string(fin_chain(4)) == "C^4");
  CHECK(to_string(ord_chain(CnfOrdinal({{2, 3}, {1, 2}}, 5))) == "w^2*3+w*2+5");
  CHECK(to_string(rev_chain(CnfOrdinal({{1, 1}}, 1))) == "rev(w+1)");
  CHECK(to_string(eta_chain(0)) == "eta");
  CHECK(to_string(eta_chain(3)) == "eta+3");
}
