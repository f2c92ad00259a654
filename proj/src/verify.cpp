#include "dscsib/verify.hpp"

#include <chrono>

#include "dscsib/classify.hpp"
#include "dscsib/embed.hpp"
#include "dscsib/error.hpp"

namespace dscsib {

namespace {

std::uint64_t pick(std::mt19937_64& rng, std::uint64_t lo, std::uint64_t hi) {
  return std::uniform_int_distribution<std::uint64_t>(lo, hi)(rng);
}

bool chance(std::mt19937_64& rng, double p) {
  return std::uniform_real_distribution<double>(0.0, 1.0)(rng) < p;
}

DeclaredChain declared_pool_entry(std::size_t which) {
  // A small fixed pool of opaque chains; r1 embeds into u1, everything else
  // is unrelated. Relation sets are transitively closed as written.
  switch (which) {
    case 0:
      return {"r1", Cardinal::aleph(0), SibCount::exact(SibAtom::one), {"u1"}, {}};
    case 1:
      return {"r2", Cardinal::aleph(0), SibCount::exact(SibAtom::one), {}, {}};
    case 2:
      return {"u1", Cardinal::aleph(1), SibCount::exact(SibAtom::one), {}, {"r1"}};
    case 3:
      return {"s0", Cardinal::aleph(0), SibCount::exact(SibAtom::aleph0), {}, {}};
    default:
      return {"e0", Cardinal::aleph(0), SibCount::exact(SibAtom::continuum), {}, {}};
  }
}

Cardinal random_mult(std::mt19937_64& rng, const GenOptions& opt, bool trivial) {
  const bool infinite_ok =
      opt.allow_infinite_mults && !(trivial && opt.finite_trivial_only);
  if (!infinite_ok || chance(rng, 0.5)) return Cardinal::finite(pick(rng, 1, 3));
  if (opt.countable_only || chance(rng, 0.6)) return Cardinal::aleph(0);
  switch (pick(rng, 0, 2)) {
    case 0: return Cardinal::aleph(1);
    case 1: return Cardinal::aleph(2);
    default: return Cardinal::aleph_omega();
  }
}

}  // namespace

std::vector<DeclaredChain> generator_declared_pool() {
  return {declared_pool_entry(0), declared_pool_entry(1), declared_pool_entry(2),
          declared_pool_entry(3), declared_pool_entry(4)};
}

OrderType random_order_type(std::mt19937_64& rng, const GenOptions& opt) {
  const std::uint64_t kinds = opt.allow_infinite_sizes ? 5 : 1;
  switch (pick(rng, 0, kinds - 1)) {
    case 0:
      return fin_chain(pick(rng, 1, opt.max_fin_size));
    case 1: {
      switch (pick(rng, 0, 4)) {
        case 0: return ord_chain(CnfOrdinal::omega());
        case 1: return ord_chain(CnfOrdinal({{1, 1}}, 1));
        case 2: return ord_chain(CnfOrdinal({{1, 2}}, 0));
        case 3: return ord_chain(CnfOrdinal({{2, 1}}, 0));
        default: return ord_chain(CnfOrdinal({{2, 1}, {1, 2}}, 1));
      }
    }
    case 2:
      return rev_chain(pick(rng, 0, 1) == 0 ? CnfOrdinal::omega()
                                            : CnfOrdinal({{1, 1}}, 1));
    case 3:
      return eta_chain(pick(rng, 0, 2));
    default: {
      if (!opt.allow_declared) return ord_chain(CnfOrdinal::omega());
      const std::uint64_t hi = opt.countable_only ? 4 : 4;
      std::size_t which = pick(rng, 0, hi);
      if (opt.countable_only && which == 2) which = 1;  // u1 is uncountable
      return declared_pool_entry(which);
    }
  }
}

DscDescription random_description(std::mt19937_64& rng, const GenOptions& opt) {
  DscDescription d;
  const std::uint64_t n_classes = pick(rng, 1, static_cast<std::uint64_t>(opt.max_classes));
  for (std::uint64_t i = 0; i < n_classes; ++i) {
    const OrderType type = random_order_type(rng, opt);
    d.classes.push_back({type, random_mult(rng, opt, is_trivial(type))});
  }
  if (opt.allow_families && chance(rng, 0.3)) {
    d.families.push_back(FinFamily{pick(rng, 1, 2), pick(rng, 1, 3)});
  }
  if (opt.force_trivial) {
    d.classes.push_back({fin_chain(1), random_mult(rng, opt, true)});
  }
  return normalize(d);
}

std::optional<FinitePoset> as_finite_poset(const DscDescription& din, std::uint64_t cap) {
  const DscDescription d = normalize(din);
  if (!purely_finite(d)) return std::nullopt;
  std::vector<std::uint64_t> sizes;
  std::uint64_t total = 0;
  for (const ComponentClass& c : d.classes) {
    const std::uint64_t n = std::get<FinChain>(c.type).n;
    const std::uint64_t k = c.mult.finite_value();
    total += n * k;
    if (total > cap) return std::nullopt;
    for (std::uint64_t copy = 0; copy < k; ++copy) sizes.push_back(n);
  }
  return FinitePoset(sizes, cap);
}

DscDescription description_of(const std::vector<std::uint64_t>& chain_sizes) {
  DscDescription d;
  for (std::uint64_t n : chain_sizes) {
    d.classes.push_back({fin_chain(n), Cardinal::finite(1)});
  }
  return normalize(d);
}

std::vector<std::string> suite_names() {
  return {"oracle-equivalence",  "finite-sibling-uniqueness",
          "infsib-finite-trivial", "pairwise-disincreasing",
          "no-embedding-trivial", "increasing-unbounded",
          "quasi-order-laws",     "certificate-replay",
          "headline-invariants"};
}

namespace {

void record_failure(SuiteResult& r, const std::string& what) {
  ++r.failures;
  if (r.notes.size() < 5) r.notes.push_back(what);
}

SuiteResult suite_oracle_equivalence(std::uint64_t cap) {
  SuiteResult r;
  r.name = "oracle-equivalence";
  const auto multisets = all_chain_multisets(cap);
  for (const auto& p : multisets) {
    const FinitePoset pp(p, cap);
    const DscDescription dp = description_of(p);
    for (const auto& q : multisets) {
      const FinitePoset qq(q, cap);
      const DscDescription dq = description_of(q);
      ++r.cases;
      const bool symbolic = dsc_embeds(dp, dq).embeds;
      const bool brute = brute_embeds(pp, qq).embeds;
      if (symbolic != brute) {
        record_failure(r, to_string(dp) + " vs " + to_string(dq));
      }
    }
  }
  return r;
}

SuiteResult suite_finite_sibling_uniqueness(std::uint64_t cap) {
  SuiteResult r;
  r.name = "finite-sibling-uniqueness";
  const MutualEmbedSweep sweep = check_mutual_embed_implies_iso(cap);
  r.cases = sweep.pairs_checked;
  for (const auto& [p, q] : sweep.counterexamples) {
    record_failure(r, to_string(description_of(p)) + " vs " + to_string(description_of(q)));
  }
  return r;
}

SuiteResult suite_infsib_finite_trivial(std::uint64_t cases) {
  SuiteResult r;
  r.name = "infsib-finite-trivial";
  std::mt19937_64 rng(0x51b1u);
  GenOptions opt;
  opt.finite_trivial_only = true;
  for (std::uint64_t i = 0; i < cases; ++i) {
    const DscDescription d = random_description(rng, opt);
    if (!lambda_profile(d).trivial_count().is_finite()) continue;
    ++r.cases;
    const bool lhs =
        dsc_embeds(plus_singletons(d, Cardinal::finite(1)), d).embeds;
    const bool rhs = increasing_analysis(d).has_increasing;
    if (lhs != rhs) record_failure(r, to_string(d));
  }
  return r;
}

SuiteResult suite_pairwise_disincreasing(std::uint64_t cases) {
  SuiteResult r;
  r.name = "pairwise-disincreasing";
  std::mt19937_64 rng(0x9a1eu);
  GenOptions opt;
  for (std::uint64_t i = 0; i < cases; ++i) {
    GenOptions local = opt;
    local.force_trivial = chance(rng, 0.7);
    const DscDescription d = random_description(rng, local);
    ++r.cases;
    const DscDescription core = nontrivial_part(d);
    const bool lhs = dsc_embeds(d, core).embeds;
    const bool rhs = cmp(disjoint_increasing_capacity(core),
                         lambda_profile(d).trivial_count()) != Cmp::lt;
    if (lhs != rhs) record_failure(r, to_string(d));
  }
  return r;
}

SuiteResult suite_no_embedding_trivial(std::uint64_t cases) {
  SuiteResult r;
  r.name = "no-embedding-trivial";
  std::mt19937_64 rng(0x0debu);
  GenOptions opt;
  opt.allow_infinite_mults = false;
  opt.allow_families = false;
  opt.force_trivial = true;
  for (std::uint64_t i = 0; i < cases; ++i) {
    const DscDescription d = random_description(rng, opt);
    const DscDescription core = nontrivial_part(d);
    if (increasing_analysis(core).has_increasing) continue;
    ++r.cases;
    if (dsc_embeds(d, core).embeds) record_failure(r, to_string(d));
  }
  return r;
}

SuiteResult suite_increasing_unbounded(std::uint64_t cases) {
  SuiteResult r;
  r.name = "increasing-unbounded";
  std::mt19937_64 rng(0x1d2bu);
  GenOptions opt;
  opt.countable_only = true;
  for (std::uint64_t i = 0; i < cases; ++i) {
    const DscDescription d = random_description(rng, opt);
    ++r.cases;
    const bool lhs = equimorphic(direct_sum(d, did()), d);
    const bool rhs = increasing_analysis(d).has_increasing_unbounded;
    if (lhs != rhs) record_failure(r, to_string(d));
  }
  return r;
}

SuiteResult suite_quasi_order_laws(std::uint64_t cases) {
  SuiteResult r;
  r.name = "quasi-order-laws";
  std::mt19937_64 rng(0xc0deu);
  GenOptions opt;
  for (std::uint64_t i = 0; i < cases; ++i) {
    ++r.cases;
    const OrderType a = random_order_type(rng, opt);
    const OrderType b = random_order_type(rng, opt);
    const OrderType c = random_order_type(rng, opt);
    if (!chain_embeds(a, a)) record_failure(r, "chain reflexivity: " + to_string(a));
    if (chain_embeds(a, b) && chain_embeds(b, c) && !chain_embeds(a, c)) {
      record_failure(r, "chain transitivity: " + to_string(a) + ", " +
                            to_string(b) + ", " + to_string(c));
    }
    GenOptions small = opt;
    small.max_classes = 3;
    const DscDescription x = random_description(rng, small);
    const DscDescription y = random_description(rng, small);
    const DscDescription z = random_description(rng, small);
    if (!dsc_embeds(x, x).embeds) record_failure(r, "dsc reflexivity: " + to_string(x));
    if (dsc_embeds(x, y).embeds && dsc_embeds(y, z).embeds &&
        !dsc_embeds(x, z).embeds) {
      record_failure(r, "dsc transitivity: " + to_string(x) + " | " +
                            to_string(y) + " | " + to_string(z));
    }
    if (equimorphic(x, y) != equimorphic(y, x)) {
      record_failure(r, "equimorphy symmetry: " + to_string(x) + " | " + to_string(y));
    }
  }
  return r;
}

bool classifier_agreement(const SibCount& general, const SibCount& countable) {
  const SibCount one = SibCount::exact(SibAtom::one);
  if (countable == one || general == one) return countable == general;
  if (countable.is_exact()) {
    return general == SibCount::exact(SibAtom::infinite);
  }
  return general == SibCount::exact(SibAtom::infinite) || general.is_range();
}

SuiteResult suite_certificate_replay(std::uint64_t cases) {
  SuiteResult r;
  r.name = "certificate-replay";
  std::mt19937_64 rng(0x5eedu);
  GenOptions opt;
  for (std::uint64_t i = 0; i < cases; ++i) {
    const DscDescription d = random_description(rng, opt);
    ++r.cases;
    const auto start = std::chrono::steady_clock::now();
    const SibResult general = classify_general(d);
    const double ms = std::chrono::duration<double, std::milli>(
                          std::chrono::steady_clock::now() - start)
                          .count();
    if (ms > 1000.0) record_failure(r, "slow: " + to_string(d));
    if (!revalidate(d, general)) {
      record_failure(r, "replay failed: " + to_string(d) + " via " +
                            std::string(rule_name(general.certificate.rule)));
    }
    if (is_countable(d)) {
      const SibResult countable = classify_countable(d);
      if (!revalidate(d, countable)) {
        record_failure(r, "countable replay failed: " + to_string(d));
      }
      if (!classifier_agreement(general.count, countable.count)) {
        record_failure(r, "classifier disagreement: " + to_string(d));
      }
    }
  }
  return r;
}

SuiteResult suite_headline_invariants(std::uint64_t cases) {
  SuiteResult r;
  r.name = "headline-invariants";
  std::mt19937_64 rng(0x7e4du);
  GenOptions countable_opt;
  countable_opt.countable_only = true;
  GenOptions general_opt;
  for (std::uint64_t i = 0; i < cases; ++i) {
    ++r.cases;
    const DscDescription dc = random_description(rng, countable_opt);
    const SibCount cc = classify_countable(dc).count;
    const bool countable_ok =
        cc == SibCount::exact(SibAtom::one) ||
        cc == SibCount::exact(SibAtom::aleph0) ||
        cc == SibCount::exact(SibAtom::continuum) ||
        (cc.is_range() && rank(cc.lo()) >= rank(SibAtom::aleph0) &&
         rank(cc.hi()) <= rank(SibAtom::continuum));
    if (!countable_ok) record_failure(r, "countable verdict: " + to_string(dc));

    const DscDescription dg = random_description(rng, general_opt);
    const SibCount cg = classify_general(dg).count;
    const bool general_ok = cg == SibCount::exact(SibAtom::one) ||
                            cg == SibCount::exact(SibAtom::infinite) ||
                            cg.is_range();
    if (!general_ok) record_failure(r, "general verdict: " + to_string(dg));
  }
  return r;
}

}  // namespace

SuiteResult run_suite(const std::string& name, std::uint64_t cap, std::uint64_t cases) {
  if (name == "oracle-equivalence") return suite_oracle_equivalence(cap);
  if (name == "finite-sibling-uniqueness") return suite_finite_sibling_uniqueness(cap);
  if (name == "infsib-finite-trivial") return suite_infsib_finite_trivial(cases);
  if (name == "pairwise-disincreasing") return suite_pairwise_disincreasing(cases);
  if (name == "no-embedding-trivial") return suite_no_embedding_trivial(cases);
  if (name == "increasing-unbounded") return suite_increasing_unbounded(cases);
  if (name == "quasi-order-laws") return suite_quasi_order_laws(cases);
  if (name == "certificate-replay") return suite_certificate_replay(cases);
  if (name == "headline-invariants") return suite_headline_invariants(cases);
  fail("InvalidArgument", "unknown verification suite: " + name);
}

}  // namespace dscsib
