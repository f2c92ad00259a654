#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "dscsib/cardinal.hpp"
#include "dscsib/ordertype.hpp"

namespace dscsib {

/// One equimorphy class of components: `mult` copies of a chain of type
/// `type`. In a normalized description the types are pairwise distinct.
struct ComponentClass {
  OrderType type;
  Cardinal mult = Cardinal::finite(1);
  friend bool operator==(const ComponentClass&, const ComponentClass&) = default;
};

/// The affine family of finite chains C^{a n + b} for n = 0, 1, 2, ...
/// Normalized descriptions require a >= 1; a = 0 collapses to a class of
/// multiplicity aleph0. The identity family (1, 1) is one chain of each
/// finite size.
struct FinFamily {
  std::uint64_t a = 1;
  std::uint64_t b = 1;
  friend auto operator<=>(const FinFamily&, const FinFamily&) = default;
};

/// A finitely presented direct sum of chains: component classes with
/// cardinal multiplicities plus affine families of finite chains.
///
/// `growing_aleph_tail` marks the one schema beyond finite presentation the
/// engine supports: the listed finite-chain classes continue so that every
/// sufficiently large size n carries a class whose multiplicity is an aleph
/// of strictly increasing, unbounded index. It has no concrete grammar form;
/// it exists so the aleph_omega capacity computation is expressible.
struct DscDescription {
  std::vector<ComponentClass> classes;
  std::vector<FinFamily> families;
  bool growing_aleph_tail = false;
  friend bool operator==(const DscDescription&, const DscDescription&) = default;

  bool empty() const { return classes.empty() && families.empty() && !growing_aleph_tail; }
};

/// The identity family as a description.
DscDescription did();

/// Canonical form: classes merged by type with multiplicities summed,
/// degenerate families folded into classes, everything sorted. Idempotent
/// and insensitive to the order of the input terms.
DscDescription normalize(const DscDescription& d);

/// Size census of a description. `lambda_at(n)` is the cardinal number of
/// components that are chains of exactly n elements, families included.
struct Profile {
  std::map<std::uint64_t, Cardinal> lambda;  // per finite size, class part
  std::vector<FinFamily> families;
  std::vector<std::pair<OrderType, Cardinal>> infinite_classes;
  bool size_unbounded = false;
  bool growing_aleph_tail = false;

  Cardinal lambda_at(std::uint64_t n) const;
  Cardinal trivial_count() const { return lambda_at(1); }
  /// Largest finite size whose class multiplicity is infinite; 0 if none.
  std::uint64_t max_infinite_lambda_size() const;
};

Profile lambda_profile(const DscDescription& d);

/// Existence of infinite component sequences, over non-trivial components
/// only. A sequence is increasing when each member embeds in the next
/// (constant sequences qualify), strictly increasing when backward
/// embeddings are also excluded, unbounded when no finite size bounds it.
struct IncreasingAnalysis {
  bool has_increasing = false;
  bool has_strictly_increasing = false;
  bool has_increasing_unbounded = false;
};

IncreasingAnalysis increasing_analysis(const DscDescription& d);

/// The largest cardinal lambda such that lambda pairwise disjoint infinite
/// increasing sequences of non-trivial components exist. Each class of
/// infinite multiplicity mu splits into mu disjoint constant sequences, each
/// family contributes aleph0, the growing-aleph tail pushes the supremum to
/// aleph_omega; Finite(0) when no source exists.
Cardinal disjoint_increasing_capacity(const DscDescription& d);

/// The description with singleton components removed.
DscDescription nontrivial_part(const DscDescription& d);

/// Components of size strictly above m (infinite sizes included).
DscDescription restrict_sizes_above(const DscDescription& d, std::uint64_t m);

bool is_countable(const DscDescription& d);
bool purely_finite(const DscDescription& d);

Cardinal total_multiplicity(const DscDescription& d);
Cardinal nontrivial_multiplicity(const DscDescription& d);

DscDescription direct_sum(const DscDescription& a, const DscDescription& b);
DscDescription plus_singletons(const DscDescription& d, const Cardinal& count);

std::string to_string(const ComponentClass& c);
std::string to_string(const FinFamily& f);
/// Canonical expression text of the explicitly listed part.
std::string to_string(const DscDescription& d);

}  // namespace dscsib
