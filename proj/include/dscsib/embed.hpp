#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "dscsib/dsc.hpp"

namespace dscsib {

/// A source or target side of a component transfer: one class or one family.
using Block = std::variant<ComponentClass, FinFamily>;

std::string to_string(const Block& b);

/// One edge of a component assignment: `amount` components of the source
/// block go to pairwise distinct components of the target block.
struct Transfer {
  Block source;
  Block target;
  Cardinal amount;
};

/// A component-level witness for an embedding between two descriptions.
/// Per source the transferred amounts sum to the source multiplicity, per
/// target the incoming amounts never exceed the target multiplicity, and
/// every edge joins embeddability-compatible blocks.
struct Assignment {
  std::vector<Transfer> transfers;
};

/// Re-checks the Assignment invariants from scratch.
bool validate(const Assignment& a, const DscDescription& d1, const DscDescription& d2);

struct EmbedResult {
  bool embeds = false;
  std::optional<Assignment> assignment;
};

/// Decides whether d1 embeds into d2.
///
/// Every embedding between direct sums of chains induces an injection on
/// components, so d1 embeds into d2 exactly when the component classes admit
/// an injective assignment to compatible classes. With block compatibility
/// (class-to-class by chain embeddability, families absorbing finite chains
/// and each other) this is a Hall condition over the finitely many blocks,
/// decided by an exponential subset scan; class counts stay small.
///
/// Fails with TooManyClasses above `class_cap` blocks on either side, and
/// with Unsupported for descriptions carrying the growing-aleph tail schema.
EmbedResult dsc_embeds(const DscDescription& d1, const DscDescription& d2,
                       std::size_t class_cap = 20);

/// Mutual embeddability.
bool equimorphic(const DscDescription& d1, const DscDescription& d2,
                 std::size_t class_cap = 20);

}  // namespace dscsib
