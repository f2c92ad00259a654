#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "dscsib/dsc.hpp"

namespace dscsib {

/// Classification rules a certificate can name.
enum class Rule {
  finite_nontrivial_d,
  infinite_sibling_component,
  increasing_sequence,
  countable_trivial,
  finite_aleph0,
  countable_bounded,
  strictly_inc,
  sib_increasing_unbounded,
  pairwise_dis_increasing,
  general_pairwise_dis_increasing_1,
  general_pairwise_dis_increasing_2,
  inf_sib_finite_trivial,
  no_increasing,
  general_no_increasing,
  bounds_only,
};

/// Stable rule identifier used in reports.
std::string_view rule_name(Rule r);
/// One-line statement of what the rule asserts.
std::string_view rule_statement(Rule r);
std::optional<Rule> rule_from_name(std::string_view name);

/// Structured data making the named rule's hypotheses checkable. Fields are
/// populated per rule; everything else stays empty.
struct Witness {
  std::optional<OrderType> component;            // offending component
  std::optional<SibCount> component_sib;
  std::optional<std::uint64_t> i, j;             // dominated size pair
  std::optional<Cardinal> lambda_i, lambda_j;
  std::optional<Cardinal> capacity;
  std::optional<Cardinal> trivial_count;
  std::optional<std::uint64_t> bound;            // strict size bound
  std::optional<std::uint64_t> cascade_m;        // last infinite-lambda size
  bool schema_tail = false;                      // growing-aleph tail engaged
  std::optional<SibCount> refined;               // countable refinement
  std::optional<SibCount> lower, upper;          // proven bounds
  std::string note;
};

struct Certificate {
  Rule rule = Rule::bounds_only;
  Witness witness;
};

/// A sibling-number verdict together with the rule that justifies it.
struct SibResult {
  SibCount count;
  Certificate certificate;
};

/// Sibling number of a countable description: every multiplicity and every
/// component size must be at most aleph0, otherwise NotCountable is raised.
/// The verdict is One, Aleph0, Continuum, or a range between proven bounds.
SibResult classify_countable(const DscDescription& d);

/// Sibling number of a description of any cardinality. Exact verdicts are
/// One or Infinite; configurations outside the implemented case analysis
/// report a range. For countable input the certificate records the refined
/// countable verdict.
SibResult classify_general(const DscDescription& d);

/// Independently re-checks that the certificate's hypotheses hold for d and
/// support the verdict. Used by the replay suites.
bool revalidate(const DscDescription& d, const SibResult& result);

}  // namespace dscsib
