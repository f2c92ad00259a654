#include "dscsib/classify.hpp"

#include <algorithm>
#include <array>

#include "dscsib/embed.hpp"
#include "dscsib/error.hpp"

namespace dscsib {

namespace {

struct RuleInfo {
  Rule rule;
  std::string_view name;
  std::string_view statement;
};

constexpr std::array<RuleInfo, 15> kRules = {{
    {Rule::finite_nontrivial_d, "FinitenontrivialD",
     "A direct sum with finitely many non-trivial components, each having a "
     "unique sibling, has a unique sibling."},
    {Rule::infinite_sibling_component, "Infinitesiblingcomponent",
     "The sibling count of a direct sum is at least the sibling count of "
     "each of its components."},
    {Rule::increasing_sequence, "Increasingsequence",
     "Countably many singletons plus an infinite embeddability-increasing "
     "sequence of non-trivial components force infinitely many siblings."},
    {Rule::countable_trivial, "Countabletrivial",
     "Infinitely many non-trivial countable components together with "
     "countably many singletons force infinitely many siblings."},
    {Rule::finite_aleph0, "Finitealeph0",
     "Finitely many non-trivial components whose largest sibling count is "
     "countably infinite give exactly countably many siblings."},
    {Rule::countable_bounded, "Countablebounded",
     "A countable sum with infinitely many non-trivial components of "
     "bounded size has exactly countably many siblings."},
    {Rule::strictly_inc, "Strictlyinc",
     "A strictly increasing sequence of components in some sibling forces "
     "continuum many siblings."},
    {Rule::sib_increasing_unbounded, "Sibincreasingunbounded",
     "An increasing and unbounded sequence of components forces continuum "
     "many siblings."},
    {Rule::pairwise_dis_increasing, "Pairwisedisincreasing",
     "The singletons re-embed among the non-trivial components exactly when "
     "there are at least as many pairwise disjoint increasing component "
     "sequences as singletons; then the sibling count is infinite."},
    {Rule::general_pairwise_dis_increasing_1, "Generalpairwisedisincreasing-1",
     "Some finite size class is dominated by an infinite multiplicity class "
     "of larger size; padding the dominated size yields infinitely many "
     "pairwise non-isomorphic siblings."},
    {Rule::general_pairwise_dis_increasing_2, "Generalpairwisedisincreasing-2",
     "Strictly decreasing infinite multiplicities over an initial range of "
     "sizes, with an increasing sequence among the larger components, yield "
     "infinitely many siblings."},
    {Rule::inf_sib_finite_trivial, "Infsibfinitetrivial",
     "With finitely many singletons, adding one more singleton re-embeds "
     "exactly when an increasing sequence of non-trivial components exists; "
     "then the sibling count is infinite."},
    {Rule::no_increasing, "Noincreasing",
     "No increasing sequence of non-trivial components and a unique sibling "
     "per component give a unique sibling."},
    {Rule::general_no_increasing, "Generalnoincreasing",
     "A strict multiplicity cascade over the small sizes plus no increasing "
     "sequence among the larger components give a unique sibling."},
    {Rule::bounds_only, "BoundsOnly",
     "The exact value is outside the implemented case analysis; the "
     "reported bounds are proven."},
}};

}  // namespace

std::string_view rule_name(Rule r) {
  for (const RuleInfo& info : kRules) {
    if (info.rule == r) return info.name;
  }
  return "";
}

std::string_view rule_statement(Rule r) {
  for (const RuleInfo& info : kRules) {
    if (info.rule == r) return info.statement;
  }
  return "";
}

std::optional<Rule> rule_from_name(std::string_view name) {
  for (const RuleInfo& info : kRules) {
    if (info.name == name) return info.rule;
  }
  return std::nullopt;
}

namespace {

SibResult make(SibCount count, Rule rule, Witness witness) {
  return SibResult{count, Certificate{rule, std::move(witness)}};
}

void ensure_countable(const DscDescription& d) {
  if (!is_countable(d)) {
    fail("NotCountable",
         "countable classification needs multiplicities and sizes <= aleph0");
  }
}

/// Sibling counts of the non-trivial component classes; families contribute
/// only finite chains, whose sibling count is One.
struct SibSurvey {
  bool all_one = true;
  bool all_one_or_aleph0 = true;
  std::optional<OrderType> aleph0_component;
  std::optional<OrderType> continuum_component;
  std::optional<OrderType> non_one_component;
  std::optional<OrderType> max_lower_component;
  SibAtom max_lower = SibAtom::one;
};

SibSurvey survey(const DscDescription& d) {
  SibSurvey s;
  for (const ComponentClass& c : d.classes) {
    const SibCount sib = chain_sib(c.type);
    if (sib == SibCount::exact(SibAtom::one)) continue;
    s.all_one = false;
    if (!s.non_one_component) s.non_one_component = c.type;
    if (sib == SibCount::exact(SibAtom::aleph0)) {
      if (!s.aleph0_component) s.aleph0_component = c.type;
    } else {
      s.all_one_or_aleph0 = false;
    }
    if (sib == SibCount::exact(SibAtom::continuum)) {
      if (!s.continuum_component) s.continuum_component = c.type;
    }
    if (rank(sib.lo()) > rank(s.max_lower)) {
      s.max_lower = sib.lo();
      s.max_lower_component = c.type;
    }
  }
  return s;
}

std::uint64_t strict_bound(const DscDescription& d) {
  std::uint64_t m = 1;
  for (const ComponentClass& c : d.classes) {
    if (const auto* f = std::get_if<FinChain>(&c.type)) m = std::max(m, f->n);
  }
  return m + 1;
}

/// The shape covered by the conjectured exact-aleph0 family: a bounded part,
/// a non-empty finite collection of components with countably many siblings
/// and finitely many further non-trivial components with a unique sibling.
bool conjectured_aleph0_shape(const DscDescription& d) {
  if (!d.families.empty() || d.growing_aleph_tail) return false;
  std::vector<Cardinal> aleph0_mults;
  std::vector<Cardinal> infinite_size_one_mults;
  for (const ComponentClass& c : d.classes) {
    const SibCount sib = chain_sib(c.type);
    if (sib == SibCount::exact(SibAtom::one)) {
      if (size(c.type).is_infinite()) infinite_size_one_mults.push_back(c.mult);
      continue;
    }
    if (sib == SibCount::exact(SibAtom::aleph0)) {
      aleph0_mults.push_back(c.mult);
      continue;
    }
    return false;
  }
  if (aleph0_mults.empty() || sum(aleph0_mults).is_infinite()) return false;
  if (!infinite_size_one_mults.empty() &&
      sum(infinite_size_one_mults).is_infinite()) {
    return false;
  }
  return true;
}

bool cascade_is_strict(const Profile& prof, std::uint64_t m) {
  for (std::uint64_t k = 1; k <= m; ++k) {
    if (!prof.lambda_at(k).is_infinite()) return false;
  }
  for (std::uint64_t k = 1; k < m; ++k) {
    if (cmp(prof.lambda_at(k), prof.lambda_at(k + 1)) != Cmp::gt) return false;
  }
  return true;
}

std::optional<std::pair<std::uint64_t, std::uint64_t>> dominated_pair(
    const Profile& prof, std::uint64_t m) {
  for (std::uint64_t j = 2; j <= m; ++j) {
    if (!prof.lambda_at(j).is_infinite()) continue;
    for (std::uint64_t i = 1; i < j; ++i) {
      if (cmp(prof.lambda_at(i), prof.lambda_at(j)) != Cmp::gt) return {{i, j}};
    }
  }
  return std::nullopt;
}

}  // namespace

SibResult classify_countable(const DscDescription& din) {
  const DscDescription d = normalize(din);
  ensure_countable(d);
  const Profile prof = lambda_profile(d);
  const SibSurvey sibs = survey(d);

  if (sibs.continuum_component) {
    Witness w;
    w.component = sibs.continuum_component;
    w.component_sib = SibCount::exact(SibAtom::continuum);
    return make(SibCount::exact(SibAtom::continuum),
                Rule::infinite_sibling_component, std::move(w));
  }

  const Cardinal ntm = nontrivial_multiplicity(d);
  if (ntm.is_finite()) {
    if (sibs.all_one) {
      Witness w;
      w.trivial_count = prof.trivial_count();
      return make(SibCount::exact(SibAtom::one), Rule::finite_nontrivial_d,
                  std::move(w));
    }
    if (sibs.all_one_or_aleph0 && sibs.aleph0_component) {
      Witness w;
      w.component = sibs.aleph0_component;
      w.component_sib = SibCount::exact(SibAtom::aleph0);
      return make(SibCount::exact(SibAtom::aleph0), Rule::finite_aleph0,
                  std::move(w));
    }
  } else {
    if (!prof.size_unbounded) {
      Witness w;
      w.bound = strict_bound(d);
      return make(SibCount::exact(SibAtom::aleph0), Rule::countable_bounded,
                  std::move(w));
    }
    const IncreasingAnalysis ia = increasing_analysis(d);
    if (ia.has_strictly_increasing) {
      return make(SibCount::exact(SibAtom::continuum), Rule::strictly_inc, {});
    }
    if (ia.has_increasing_unbounded) {
      return make(SibCount::exact(SibAtom::continuum),
                  Rule::sib_increasing_unbounded, {});
    }
  }

  // Remaining configurations sit between proven bounds: infinitely many
  // non-trivial components push the count to at least aleph0, countability
  // caps it at continuum.
  SibAtom lo = sibs.max_lower;
  // An unspecified "infinite" component lower bound floors at aleph0 here.
  if (lo == SibAtom::infinite) lo = SibAtom::aleph0;
  if (ntm.is_infinite() && rank(lo) < rank(SibAtom::aleph0)) lo = SibAtom::aleph0;
  Witness w;
  w.trivial_count = prof.trivial_count();
  if (ntm.is_infinite()) {
    w.note = "lower bound: infinitely many non-trivial countable components "
             "with countably many singletons; upper bound: countability";
  }
  if (conjectured_aleph0_shape(d)) {
    if (!w.note.empty()) w.note += "; ";
    w.note += "conjectured exact value Aleph0 (unproven)";
  }
  if (lo == SibAtom::continuum) {
    // a component with lower bound continuum pins the countable count
    Witness exact_w;
    exact_w.component = sibs.max_lower_component;
    exact_w.component_sib = chain_sib(*sibs.max_lower_component);
    return make(SibCount::exact(SibAtom::continuum),
                Rule::infinite_sibling_component, std::move(exact_w));
  }
  w.lower = SibCount::exact(lo);
  w.upper = SibCount::exact(SibAtom::continuum);
  return make(SibCount::range(lo, SibAtom::continuum), Rule::bounds_only,
              std::move(w));
}

SibResult classify_general(const DscDescription& din) {
  const DscDescription d = normalize(din);
  const Profile prof = lambda_profile(d);
  const SibSurvey sibs = survey(d);

  // (1) a component with provably several siblings lifts to the whole sum;
  // a declared count that merely ranges down to One proves nothing here
  if (rank(sibs.max_lower) > rank(SibAtom::one)) {
    Witness w;
    w.component = sibs.max_lower_component;
    w.component_sib = chain_sib(*sibs.max_lower_component);
    if (is_countable(d)) w.refined = classify_countable(d).count;
    return make(SibCount::exact(SibAtom::infinite),
                Rule::infinite_sibling_component, std::move(w));
  }

  // (2) finitely many non-trivial components, all with a unique sibling
  const Cardinal ntm = nontrivial_multiplicity(d);
  if (ntm.is_finite() && sibs.all_one) {
    Witness w;
    w.trivial_count = prof.trivial_count();
    return make(SibCount::exact(SibAtom::one), Rule::finite_nontrivial_d,
                std::move(w));
  }

  // (3) a dominated size below an infinite multiplicity
  const std::uint64_t m = prof.max_infinite_lambda_size();
  if (auto pair = dominated_pair(prof, m)) {
    Witness w;
    w.i = pair->first;
    w.j = pair->second;
    w.lambda_i = prof.lambda_at(pair->first);
    w.lambda_j = prof.lambda_at(pair->second);
    return make(SibCount::exact(SibAtom::infinite),
                Rule::general_pairwise_dis_increasing_1, std::move(w));
  }
  if (d.growing_aleph_tail) {
    Witness w;
    w.schema_tail = true;
    w.note = "the growing-aleph tail supplies a dominated size pair at "
             "every pair of tail sizes";
    return make(SibCount::exact(SibAtom::infinite),
                Rule::general_pairwise_dis_increasing_1, std::move(w));
  }

  // (4) enough disjoint increasing sequences to absorb the singletons
  const Cardinal trivial = prof.trivial_count();
  if (cmp(trivial, Cardinal::finite(1)) != Cmp::lt) {
    const Cardinal capacity = disjoint_increasing_capacity(nontrivial_part(d));
    if (cmp(capacity, trivial) != Cmp::lt) {
      Witness w;
      w.capacity = capacity;
      w.trivial_count = trivial;
      return make(SibCount::exact(SibAtom::infinite),
                  Rule::pairwise_dis_increasing, std::move(w));
    }
  }

  // (5) finitely many singletons, some increasing sequence
  if (trivial.is_finite()) {
    const IncreasingAnalysis ia = increasing_analysis(d);
    if (ia.has_increasing) {
      Witness w;
      w.trivial_count = trivial;
      const Rule rule = trivial == Cardinal::finite(0)
                            ? Rule::increasing_sequence
                            : Rule::inf_sib_finite_trivial;
      return make(SibCount::exact(SibAtom::infinite), rule, std::move(w));
    }
  }

  // (6) strict multiplicity cascade; the components above it decide
  if (m >= 1 && cascade_is_strict(prof, m)) {
    const DscDescription above = restrict_sizes_above(d, m);
    Witness w;
    w.cascade_m = m;
    if (increasing_analysis(above).has_increasing) {
      w.capacity = disjoint_increasing_capacity(above);
      return make(SibCount::exact(SibAtom::infinite),
                  Rule::general_pairwise_dis_increasing_2, std::move(w));
    }
    // the unique-sibling conclusion needs every component to have one
    if (sibs.all_one) {
      return make(SibCount::exact(SibAtom::one), Rule::general_no_increasing,
                  std::move(w));
    }
  }

  // (7) no singletons, infinitely many non-trivial components, and no
  // increasing sequence at all
  if (trivial == Cardinal::finite(0) && sibs.all_one &&
      !increasing_analysis(d).has_increasing) {
    return make(SibCount::exact(SibAtom::one), Rule::no_increasing, {});
  }

  // (8) nothing applies
  Witness w;
  w.lower = SibCount::exact(SibAtom::one);
  w.upper = SibCount::exact(SibAtom::infinite);
  w.note = "no implemented case applies";
  return make(SibCount::range(SibAtom::one, SibAtom::infinite),
              Rule::bounds_only, std::move(w));
}

bool revalidate(const DscDescription& din, const SibResult& result) {
  const DscDescription d = normalize(din);
  const Profile prof = lambda_profile(d);
  const SibSurvey sibs = survey(d);
  const Certificate& cert = result.certificate;
  const SibCount& count = result.count;

  // A range verdict and the bounds-only rule must coincide.
  if ((cert.rule == Rule::bounds_only) != count.is_range()) return false;

  auto occurs = [&](const OrderType& t) {
    return std::any_of(d.classes.begin(), d.classes.end(),
                       [&](const ComponentClass& c) { return c.type == t; });
  };

  switch (cert.rule) {
    case Rule::infinite_sibling_component: {
      if (!cert.witness.component || !cert.witness.component_sib) return false;
      if (!occurs(*cert.witness.component)) return false;
      const SibCount sib = chain_sib(*cert.witness.component);
      if (sib != *cert.witness.component_sib) return false;
      // the witness must provably contribute more than one sibling
      if (rank(sib.lo()) <= rank(SibAtom::one)) return false;
      return count.is_exact() && rank(count.atom()) >= rank(sib.lo());
    }
    case Rule::finite_nontrivial_d:
      return nontrivial_multiplicity(d).is_finite() && sibs.all_one &&
             count == SibCount::exact(SibAtom::one);
    case Rule::finite_aleph0:
      return nontrivial_multiplicity(d).is_finite() && !sibs.all_one &&
             sibs.all_one_or_aleph0 && cert.witness.component &&
             occurs(*cert.witness.component) &&
             chain_sib(*cert.witness.component) ==
                 SibCount::exact(SibAtom::aleph0) &&
             count == SibCount::exact(SibAtom::aleph0);
    case Rule::countable_bounded:
      return is_countable(d) && nontrivial_multiplicity(d).is_infinite() &&
             !prof.size_unbounded && cert.witness.bound &&
             *cert.witness.bound == strict_bound(d) &&
             count == SibCount::exact(SibAtom::aleph0);
    case Rule::strictly_inc:
      return increasing_analysis(d).has_strictly_increasing &&
             count == SibCount::exact(SibAtom::continuum);
    case Rule::sib_increasing_unbounded:
      return increasing_analysis(d).has_increasing_unbounded &&
             count == SibCount::exact(SibAtom::continuum);
    case Rule::pairwise_dis_increasing: {
      if (!cert.witness.capacity || !cert.witness.trivial_count) return false;
      const Cardinal trivial = prof.trivial_count();
      const Cardinal capacity =
          disjoint_increasing_capacity(nontrivial_part(d));
      return cmp(trivial, Cardinal::finite(1)) != Cmp::lt &&
             capacity == *cert.witness.capacity &&
             trivial == *cert.witness.trivial_count &&
             cmp(capacity, trivial) != Cmp::lt &&
             count == SibCount::exact(SibAtom::infinite);
    }
    case Rule::general_pairwise_dis_increasing_1: {
      if (count != SibCount::exact(SibAtom::infinite)) return false;
      if (cert.witness.schema_tail) return d.growing_aleph_tail;
      if (!cert.witness.i || !cert.witness.j) return false;
      const std::uint64_t i = *cert.witness.i;
      const std::uint64_t j = *cert.witness.j;
      return i >= 1 && i < j && prof.lambda_at(j).is_infinite() &&
             cmp(prof.lambda_at(i), prof.lambda_at(j)) != Cmp::gt;
    }
    case Rule::general_pairwise_dis_increasing_2: {
      if (!cert.witness.cascade_m) return false;
      const std::uint64_t m = *cert.witness.cascade_m;
      return m >= 1 && cascade_is_strict(prof, m) &&
             prof.max_infinite_lambda_size() == m &&
             increasing_analysis(restrict_sizes_above(d, m)).has_increasing &&
             count == SibCount::exact(SibAtom::infinite);
    }
    case Rule::inf_sib_finite_trivial: {
      const Cardinal trivial = prof.trivial_count();
      if (!trivial.is_finite() || trivial == Cardinal::finite(0)) return false;
      if (!increasing_analysis(d).has_increasing) return false;
      // The rule's own biconditional: one extra singleton must re-embed.
      if (!dsc_embeds(plus_singletons(d, Cardinal::finite(1)), d).embeds) {
        return false;
      }
      return count == SibCount::exact(SibAtom::infinite);
    }
    case Rule::increasing_sequence:
      return prof.trivial_count() == Cardinal::finite(0) &&
             increasing_analysis(d).has_increasing &&
             count == SibCount::exact(SibAtom::infinite);
    case Rule::no_increasing:
      return prof.trivial_count() == Cardinal::finite(0) &&
             nontrivial_multiplicity(d).is_infinite() &&
             !increasing_analysis(d).has_increasing && sibs.all_one &&
             count == SibCount::exact(SibAtom::one);
    case Rule::general_no_increasing: {
      if (!cert.witness.cascade_m) return false;
      const std::uint64_t m = *cert.witness.cascade_m;
      return m >= 1 && cascade_is_strict(prof, m) && sibs.all_one &&
             !increasing_analysis(restrict_sizes_above(d, m)).has_increasing &&
             count == SibCount::exact(SibAtom::one);
    }
    case Rule::countable_trivial:
      return nontrivial_multiplicity(d).is_infinite() && is_countable(d);
    case Rule::bounds_only:
      return count.is_range();
  }
  return false;
}

}  // namespace dscsib
