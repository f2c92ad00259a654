#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "dscsib/dsc.hpp"
#include "dscsib/finite_oracle.hpp"

namespace dscsib {

/// Outcome of one named verification suite.
struct SuiteResult {
  std::string name;
  std::uint64_t cases = 0;
  std::uint64_t failures = 0;
  std::vector<std::string> notes;  // first few failing instances
  bool passed() const { return failures == 0 && cases > 0; }
};

/// Suites runnable from the CLI and from the acceptance harness:
///   oracle-equivalence        symbolic embedding vs brute force, all finite
///                             pairs with total size <= cap
///   finite-sibling-uniqueness mutual brute embedding implies isomorphism
///   infsib-finite-trivial     one extra singleton re-embeds iff an
///                             increasing sequence exists
///   pairwise-disincreasing    singleton absorption iff capacity >= lambda_1
///   no-embedding-trivial      no increasing sequence blocks absorption
///   increasing-unbounded      adding the identity family is neutral iff an
///                             increasing unbounded sequence exists
///   quasi-order-laws          reflexivity and transitivity of embeddability
///   certificate-replay        classification terminates, certificates
///                             re-validate, both classifiers agree
///   headline-invariants       verdicts stay inside the proven value sets
std::vector<std::string> suite_names();

/// Runs one suite. `cap` bounds exhaustive sweeps (default 7), `cases`
/// sizes the randomized suites (default 250).
SuiteResult run_suite(const std::string& name, std::uint64_t cap = 7,
                      std::uint64_t cases = 250);

/// Random description generator used by the property suites.
struct GenOptions {
  bool countable_only = false;
  bool allow_families = true;
  bool allow_infinite_sizes = true;
  bool allow_declared = true;
  bool allow_infinite_mults = true;
  bool finite_trivial_only = false;
  bool force_trivial = false;
  int max_classes = 4;
  std::uint64_t max_fin_size = 6;
};

DscDescription random_description(std::mt19937_64& rng, const GenOptions& opt);
OrderType random_order_type(std::mt19937_64& rng, const GenOptions& opt);

/// The declared chains the generator draws from, as a loadable registry.
std::vector<DeclaredChain> generator_declared_pool();

/// Explicit poset of a purely finite description, when within the cap.
std::optional<FinitePoset> as_finite_poset(const DscDescription& d,
                                           std::uint64_t cap = FinitePoset::default_cap);

/// Description view of an explicit chain multiset.
DscDescription description_of(const std::vector<std::uint64_t>& chain_sizes);

}  // namespace dscsib
