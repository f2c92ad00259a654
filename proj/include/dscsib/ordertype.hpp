#pragma once

#include <compare>
#include <cstdint>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "dscsib/cardinal.hpp"

namespace dscsib {

/// Atoms of a sibling-number verdict, ordered
/// one < aleph0 < continuum <= infinite. `infinite` stands for an infinite
/// count whose exact cardinality is not pinned down.
enum class SibAtom : std::uint8_t { one = 0, aleph0 = 1, continuum = 2, infinite = 3 };

int rank(SibAtom a);
std::string to_string(SibAtom a);

/// A sibling count: either an exact atom or a closed range [lo, hi] of atoms
/// with lo strictly below hi.
class SibCount {
 public:
  constexpr SibCount() = default;  // One

  static SibCount exact(SibAtom a);
  static SibCount range(SibAtom lo, SibAtom hi);  // requires rank(lo) < rank(hi)

  bool is_exact() const { return lo_ == hi_; }
  bool is_range() const { return lo_ != hi_; }
  SibAtom atom() const;  // requires is_exact()
  SibAtom lo() const { return lo_; }
  SibAtom hi() const { return hi_; }

  friend bool operator==(const SibCount&, const SibCount&) = default;
  std::string to_string() const;

 private:
  SibAtom lo_ = SibAtom::one;
  SibAtom hi_ = SibAtom::one;
};

/// One term of a Cantor normal form: omega^exp * coef with exp, coef >= 1.
struct CnfTerm {
  std::uint64_t exp = 1;
  std::uint64_t coef = 1;
  friend constexpr auto operator<=>(const CnfTerm&, const CnfTerm&) = default;
};

/// An infinite ordinal below omega^omega in Cantor normal form:
/// omega^{e1} c1 + ... + omega^{ek} ck + tail with e1 > ... > ek >= 1,
/// all coefficients >= 1 and a finite tail >= 0. At least one omega term is
/// present, so the value is infinite; finite chains live in FinChain.
class CnfOrdinal {
 public:
  CnfOrdinal(std::vector<CnfTerm> terms, std::uint64_t tail);

  static CnfOrdinal omega() { return CnfOrdinal({{1, 1}}, 0); }

  const std::vector<CnfTerm>& terms() const { return terms_; }
  std::uint64_t tail() const { return tail_; }

  /// Ordinal addition (left summand absorbed below the right head).
  CnfOrdinal plus(const CnfOrdinal& rhs) const;
  CnfOrdinal plus_finite(std::uint64_t n) const;

  friend bool operator==(const CnfOrdinal&, const CnfOrdinal&) = default;
  std::strong_ordering operator<=>(const CnfOrdinal& rhs) const;

  std::string to_string() const;
  bool is_compound() const { return terms_.size() > 1 || tail_ > 0 || terms_[0].coef > 1 || terms_[0].exp > 1; }

 private:
  std::vector<CnfTerm> terms_;
  std::uint64_t tail_ = 0;
};

/// The finite chain C^n, n >= 1.
struct FinChain {
  std::uint64_t n = 1;
  friend bool operator==(const FinChain&, const FinChain&) = default;
};

/// A chain of infinite ordinal order type.
struct OrdChain {
  CnfOrdinal alpha;
  friend bool operator==(const OrdChain&, const OrdChain&) = default;
};

/// The reverse order of an infinite ordinal.
struct RevChain {
  CnfOrdinal alpha;
  friend bool operator==(const RevChain&, const RevChain&) = default;
};

/// The rationals followed by a finite chain of `tail` elements; tail 0 is the
/// dense order itself.
struct EtaChain {
  std::uint64_t tail = 0;
  friend bool operator==(const EtaChain&, const EtaChain&) = default;
};

/// An opaque user-declared infinite chain class. Embeddability against other
/// declared chains is exactly what the relation sets say (plus reflexivity);
/// everything not declared is non-embeddable, except that finite chains embed
/// into any declared chain by size.
struct DeclaredChain {
  std::string name;
  Cardinal size;  // must be infinite
  SibCount sib;
  std::set<std::string> embeds_into;
  std::set<std::string> embeds_from;
  friend bool operator==(const DeclaredChain&, const DeclaredChain&) = default;
};

using OrderType = std::variant<FinChain, OrdChain, RevChain, EtaChain, DeclaredChain>;

OrderType fin_chain(std::uint64_t n);
OrderType ord_chain(CnfOrdinal alpha);
OrderType rev_chain(CnfOrdinal alpha);
OrderType eta_chain(std::uint64_t tail);

Cardinal size(const OrderType& t);
bool is_trivial(const OrderType& t);

/// Decides whether a chain of type s order-embeds into a chain of type t.
bool chain_embeds(const OrderType& s, const OrderType& t);

/// Number of isomorphism classes of siblings of a single chain.
SibCount chain_sib(const OrderType& t);

/// k pairwise non-isomorphic order types, each mutually embeddable with t.
/// Fails with SingleSibling when chain_sib(t) is One, and with Unsupported
/// for declared chains (their siblings are not constructible here).
std::vector<OrderType> sibling_variants(const OrderType& t, std::uint64_t k);

/// Fixed total order on normal forms, used for canonical sorting.
std::strong_ordering canonical_order(const OrderType& a, const OrderType& b);
bool canonical_less(const OrderType& a, const OrderType& b);

/// Canonical chain text: "C^4", "w^2*3+w*2+5", "rev(w+1)", "eta+3", "X(r1)".
std::string to_string(const OrderType& t);

}  // namespace dscsib
