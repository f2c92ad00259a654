#include "dscsib/ordertype.hpp"

#include <algorithm>
#include <cassert>

#include "dscsib/error.hpp"

namespace dscsib {

int rank(SibAtom a) { return static_cast<int>(a); }

std::string to_string(SibAtom a) {
  switch (a) {
    case SibAtom::one: return "One";
    case SibAtom::aleph0: return "Aleph0";
    case SibAtom::continuum: return "Continuum";
    case SibAtom::infinite: return "Infinite";
  }
  return {};
}

SibCount SibCount::exact(SibAtom a) {
  SibCount c;
  c.lo_ = c.hi_ = a;
  return c;
}

SibCount SibCount::range(SibAtom lo, SibAtom hi) {
  if (rank(lo) >= rank(hi)) {
    fail("InvalidArgument", "sibling range requires lo < hi");
  }
  SibCount c;
  c.lo_ = lo;
  c.hi_ = hi;
  return c;
}

SibAtom SibCount::atom() const {
  assert(is_exact());
  return lo_;
}

std::string SibCount::to_string() const {
  if (is_exact()) return dscsib::to_string(lo_);
  return "Range(" + dscsib::to_string(lo_) + "," + dscsib::to_string(hi_) + ")";
}

CnfOrdinal::CnfOrdinal(std::vector<CnfTerm> terms, std::uint64_t tail)
    : terms_(std::move(terms)), tail_(tail) {
  if (terms_.empty()) {
    fail("InvalidOrdinal", "an infinite ordinal needs at least one omega term");
  }
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    if (terms_[i].exp < 1 || terms_[i].coef < 1) {
      fail("InvalidOrdinal", "omega-term exponents and coefficients must be >= 1");
    }
    if (i > 0 && terms_[i - 1].exp <= terms_[i].exp) {
      fail("InvalidOrdinal", "omega-term exponents must strictly decrease");
    }
  }
}

CnfOrdinal CnfOrdinal::plus(const CnfOrdinal& rhs) const {
  // Ordinal addition: everything in the left summand strictly below the
  // right head is absorbed; equal leading exponents add coefficients.
  const std::uint64_t head = rhs.terms_.front().exp;
  std::vector<CnfTerm> out;
  for (const CnfTerm& t : terms_) {
    if (t.exp > head) out.push_back(t);
  }
  std::vector<CnfTerm> rest = rhs.terms_;
  if (!terms_.empty()) {
    for (const CnfTerm& t : terms_) {
      if (t.exp == head) rest.front().coef += t.coef;
    }
  }
  out.insert(out.end(), rest.begin(), rest.end());
  return CnfOrdinal(std::move(out), rhs.tail_);
}

CnfOrdinal CnfOrdinal::plus_finite(std::uint64_t n) const {
  CnfOrdinal r = *this;
  r.tail_ += n;
  return r;
}

std::strong_ordering CnfOrdinal::operator<=>(const CnfOrdinal& rhs) const {
  const std::size_t n = std::min(terms_.size(), rhs.terms_.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (auto c = terms_[i] <=> rhs.terms_[i]; c != 0) return c;
  }
  // A longer term list continues with omega powers, which dominate any tail.
  if (terms_.size() != rhs.terms_.size()) {
    return terms_.size() <=> rhs.terms_.size();
  }
  return tail_ <=> rhs.tail_;
}

std::string CnfOrdinal::to_string() const {
  std::string out;
  for (const CnfTerm& t : terms_) {
    if (!out.empty()) out += "+";
    out += t.exp == 1 ? "w" : "w^" + std::to_string(t.exp);
    if (t.coef > 1) out += "*" + std::to_string(t.coef);
  }
  if (tail_ > 0) out += "+" + std::to_string(tail_);
  return out;
}

OrderType fin_chain(std::uint64_t n) {
  if (n < 1) fail("InvalidArgument", "finite chains have size >= 1");
  return FinChain{n};
}

OrderType ord_chain(CnfOrdinal alpha) { return OrdChain{std::move(alpha)}; }
OrderType rev_chain(CnfOrdinal alpha) { return RevChain{std::move(alpha)}; }
OrderType eta_chain(std::uint64_t tail) { return EtaChain{tail}; }

Cardinal size(const OrderType& t) {
  return std::visit(
      [](const auto& node) -> Cardinal {
        using T = std::decay_t<decltype(node)>;
        if constexpr (std::is_same_v<T, FinChain>) {
          return Cardinal::finite(node.n);
        } else if constexpr (std::is_same_v<T, DeclaredChain>) {
          return node.size;
        } else {
          return Cardinal::aleph(0);
        }
      },
      t);
}

bool is_trivial(const OrderType& t) { return size(t) == Cardinal::finite(1); }

bool chain_embeds(const OrderType& s, const OrderType& t) {
  // Finite chains embed wherever the target is large enough.
  if (const auto* fs = std::get_if<FinChain>(&s)) {
    return cmp(size(t), Cardinal::finite(fs->n)) != Cmp::lt;
  }
  // From here on s is infinite, so a finite target never fits.
  if (std::holds_alternative<FinChain>(t)) return false;

  if (const auto* os = std::get_if<OrdChain>(&s)) {
    if (const auto* ot = std::get_if<OrdChain>(&t)) return os->alpha <= ot->alpha;
    // An infinite ordinal contains a copy of omega, which no reversed
    // ordinal has; suborders of well-orders are well-orders, so eta is the
    // only remaining catalog host.
    if (std::holds_alternative<EtaChain>(t)) return true;
    return false;
  }
  if (const auto* rs = std::get_if<RevChain>(&s)) {
    if (const auto* rt = std::get_if<RevChain>(&t)) return rs->alpha <= rt->alpha;
    if (std::holds_alternative<EtaChain>(t)) return true;
    return false;
  }
  if (std::holds_alternative<EtaChain>(s)) {
    return std::holds_alternative<EtaChain>(t);
  }

  const auto& ds = std::get<DeclaredChain>(s);
  if (const auto* dt = std::get_if<DeclaredChain>(&t)) {
    return ds.name == dt->name || ds.embeds_into.count(dt->name) > 0 ||
           dt->embeds_from.count(ds.name) > 0;
  }
  // Declared chains relate to the rest of the catalog only through the
  // finite-chain rule above; everything unspecified is non-embeddable.
  return false;
}

SibCount chain_sib(const OrderType& t) {
  return std::visit(
      [](const auto& node) -> SibCount {
        using T = std::decay_t<decltype(node)>;
        if constexpr (std::is_same_v<T, EtaChain>) {
          return SibCount::exact(SibAtom::continuum);
        } else if constexpr (std::is_same_v<T, DeclaredChain>) {
          return node.sib;
        } else {
          // Finite chains, ordinals and reversed ordinals are determined up
          // to isomorphism by mutual embeddability: embeddability of
          // well-orders is antisymmetric.
          return SibCount::exact(SibAtom::one);
        }
      },
      t);
}

std::vector<OrderType> sibling_variants(const OrderType& t, std::uint64_t k) {
  if (k < 1) fail("InvalidArgument", "sibling_variants needs k >= 1");
  const SibCount sib = chain_sib(t);
  if (sib == SibCount::exact(SibAtom::one)) {
    fail("SingleSibling", "chain has a unique sibling, no variants exist");
  }
  if (std::holds_alternative<DeclaredChain>(t)) {
    fail("Unsupported", "variants of a declared chain are not constructible");
  }
  // The only catalog chains with several siblings are the eta family; the
  // tail length (elements with finitely many elements above) separates them
  // up to isomorphism while keeping mutual embeddability.
  std::vector<OrderType> out;
  out.reserve(k);
  for (std::uint64_t m = 0; m < k; ++m) out.push_back(eta_chain(m));
  return out;
}

std::strong_ordering canonical_order(const OrderType& a, const OrderType& b) {
  if (a.index() != b.index()) return a.index() <=> b.index();
  if (const auto* fa = std::get_if<FinChain>(&a)) {
    return fa->n <=> std::get<FinChain>(b).n;
  }
  if (const auto* oa = std::get_if<OrdChain>(&a)) {
    return oa->alpha <=> std::get<OrdChain>(b).alpha;
  }
  if (const auto* ra = std::get_if<RevChain>(&a)) {
    return ra->alpha <=> std::get<RevChain>(b).alpha;
  }
  if (const auto* ea = std::get_if<EtaChain>(&a)) {
    return ea->tail <=> std::get<EtaChain>(b).tail;
  }
  return std::get<DeclaredChain>(a).name <=> std::get<DeclaredChain>(b).name;
}

bool canonical_less(const OrderType& a, const OrderType& b) {
  return canonical_order(a, b) < 0;
}

std::string to_string(const OrderType& t) {
  return std::visit(
      [](const auto& node) -> std::string {
        using T = std::decay_t<decltype(node)>;
        if constexpr (std::is_same_v<T, FinChain>) {
          return "C^" + std::to_string(node.n);
        } else if constexpr (std::is_same_v<T, OrdChain>) {
          return node.alpha.to_string();
        } else if constexpr (std::is_same_v<T, RevChain>) {
          return "rev(" + node.alpha.to_string() + ")";
        } else if constexpr (std::is_same_v<T, EtaChain>) {
          return node.tail == 0 ? "eta" : "eta+" + std::to_string(node.tail);
        } else {
          return "X(" + node.name + ")";
        }
      },
      t);
}

}  // namespace dscsib
