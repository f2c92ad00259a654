#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "dscsib/dsc.hpp"

namespace dscsib {

/// Siblings obtained by padding the non-trivial part with m extra
/// singletons, m = 1..k. Requires that one extra singleton re-embeds into
/// the non-trivial part (ConditionFails otherwise); the members have
/// pairwise distinct singleton counts. Every member is re-checked to be
/// equimorphic to d before it is returned.
std::vector<DscDescription> padding_family(const DscDescription& d, std::uint64_t k);

/// For a countable bounded d with infinitely many non-trivial components,
/// the sibling with prescribed numbers t[0..n-2] of components of sizes
/// 1..n-1, where n is the largest size of infinite multiplicity: the result
/// is t_1 C^1 + ... + t_{n-1} C^{n-1} + aleph0 C^n + (classes of size > n).
/// Entries of t must be at most aleph0.
DscDescription bounded_family(const DscDescription& d, const std::vector<Cardinal>& t);

/// An eventually periodic subset of the naturals: an explicit prefix below
/// `threshold` plus residues mod `modulus` from `threshold` on.
struct PeriodicSet {
  std::uint64_t threshold = 0;
  std::vector<bool> prefix;           // membership of 0..threshold-1
  std::uint64_t modulus = 1;
  std::vector<bool> residues;         // membership of n >= threshold by n % modulus

  bool contains(std::uint64_t n) const;
  bool is_infinite() const;

  static PeriodicSet all();
  static PeriodicSet evens();
  static PeriodicSet odds();
  static PeriodicSet residue(std::uint64_t r, std::uint64_t q);
  /// Accepts "all", "evens", "odds" or "<r>%<q>".
  static PeriodicSet parse(std::string_view text);
  std::string to_string() const;
};

/// The sibling that keeps only the members of the strictly increasing family
/// indexed by J (positions within the first affine family of d) plus every
/// component embedding in none of them. Requires a strictly increasing
/// family (NoStrictFamily) and an infinite J (FiniteJ). Different J give
/// non-isomorphic outputs.
DscDescription qj_family(const DscDescription& d, const PeriodicSet& J);

/// k siblings obtained by replacing every component equimorphic to `target`
/// with the i-th sibling variant of `target`. Requires target to occur in d
/// (AbsentTarget) and to have several siblings (errors propagate from
/// sibling_variants).
std::vector<DscDescription> component_swap_family(const DscDescription& d,
                                                  const OrderType& target,
                                                  std::uint64_t k);

}  // namespace dscsib
