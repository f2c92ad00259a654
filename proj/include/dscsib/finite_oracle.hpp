#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

namespace dscsib {

/// An explicit disjoint union of finite chains. Elements are numbered
/// chain by chain, position by position; two elements are comparable exactly
/// when they share a chain.
class FinitePoset {
 public:
  static constexpr std::uint64_t default_cap = 12;

  explicit FinitePoset(std::vector<std::uint64_t> chain_sizes,
                       std::uint64_t cap = default_cap);

  const std::vector<std::uint64_t>& chains() const { return chains_; }
  std::size_t total_size() const { return total_; }

  /// Chain index and in-chain position of element e.
  std::pair<std::size_t, std::uint64_t> locate(std::size_t e) const;

 private:
  std::vector<std::uint64_t> chains_;
  std::size_t total_ = 0;
};

/// Element map: image of each p-element as a q-element index.
using ElementMap = std::vector<std::size_t>;

struct BruteEmbedResult {
  bool embeds = false;
  std::optional<ElementMap> witness;
};

/// Backtracking search for an injective map preserving both comparability
/// and incomparability. Deliberately element-level; it shares no logic with
/// the symbolic engine it validates.
BruteEmbedResult brute_embeds(const FinitePoset& p, const FinitePoset& q);

/// Enumerates witness embeddings (up to interchanging equal-sized unused
/// target chains) until the callback returns false or the budget runs out.
/// Returns the number of witnesses visited.
std::uint64_t for_each_embedding(const FinitePoset& p, const FinitePoset& q,
                                 std::uint64_t budget,
                                 const std::function<bool(const ElementMap&)>& visit);

/// Isomorphism of disjoint unions of chains: equality of the size multisets.
bool brute_iso(const FinitePoset& p, const FinitePoset& q);

struct MutualEmbedSweep {
  std::uint64_t pairs_checked = 0;
  std::uint64_t mutual_pairs = 0;
  std::vector<std::pair<std::vector<std::uint64_t>, std::vector<std::uint64_t>>>
      counterexamples;
};

/// Over every ordered pair of chain multisets with total size <= cap,
/// asserts that mutual embeddability implies isomorphism and reports any
/// counterexample (none are expected).
MutualEmbedSweep check_mutual_embed_implies_iso(std::uint64_t cap);

/// For every witness embedding found (up to the budget), derives the induced
/// component map from the element map and checks that it is well defined and
/// injective. Requires brute_embeds(p, q) to hold.
bool induced_injection_check(const FinitePoset& p, const FinitePoset& q,
                             std::uint64_t witness_budget = 20000);

/// All multisets of positive integers with sum between 1 and max_total,
/// each listed in non-increasing order.
std::vector<std::vector<std::uint64_t>> all_chain_multisets(std::uint64_t max_total);

}  // namespace dscsib
