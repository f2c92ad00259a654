#include "dscsib/witness.hpp"

#include <algorithm>

#include "dscsib/embed.hpp"
#include "dscsib/error.hpp"

namespace dscsib {

namespace {

void check_sibling(const DscDescription& candidate, const DscDescription& d,
                   const char* generator) {
  if (!equimorphic(candidate, d)) {
    fail("InternalError",
         std::string(generator) + " produced a non-equimorphic candidate: " +
             to_string(candidate));
  }
}

}  // namespace

std::vector<DscDescription> padding_family(const DscDescription& din, std::uint64_t k) {
  if (k < 1) fail("InvalidArgument", "padding_family needs k >= 1");
  const DscDescription d = normalize(din);
  const DscDescription core = nontrivial_part(d);
  // One extra singleton must re-embed; this covers both the singleton
  // absorption condition and, for singleton-free d, the existence of an
  // increasing sequence.
  if (!dsc_embeds(plus_singletons(d, Cardinal::finite(1)), core).embeds) {
    fail("ConditionFails",
         "the singletons of " + to_string(d) +
             " do not re-embed among its non-trivial components");
  }
  std::vector<DscDescription> out;
  out.reserve(k);
  for (std::uint64_t m = 1; m <= k; ++m) {
    DscDescription member = plus_singletons(core, Cardinal::finite(m));
    check_sibling(member, d, "padding_family");
    out.push_back(std::move(member));
  }
  return out;
}

DscDescription bounded_family(const DscDescription& din, const std::vector<Cardinal>& t) {
  const DscDescription d = normalize(din);
  if (!is_countable(d)) fail("NotCountable", "bounded_family needs a countable sum");
  const Profile prof = lambda_profile(d);
  if (prof.size_unbounded) {
    fail("NotBounded", "component sizes of " + to_string(d) + " are unbounded");
  }
  // Largest size >= 2 whose multiplicity is infinite.
  std::uint64_t n = 0;
  for (const auto& [size, mult] : prof.lambda) {
    if (size >= 2 && mult.is_infinite()) n = std::max(n, size);
  }
  if (n == 0) {
    fail("NotBounded",
         "bounded_family needs infinitely many non-trivial components");
  }
  if (t.size() != n - 1) {
    fail("InvalidArgument", "expected " + std::to_string(n - 1) +
                                " prescribed multiplicities, got " +
                                std::to_string(t.size()));
  }
  for (const Cardinal& c : t) {
    if (cmp(c, Cardinal::aleph(0)) == Cmp::gt) {
      fail("InvalidArgument", "prescribed multiplicities must be <= aleph0");
    }
  }

  DscDescription out;
  for (std::uint64_t m = 1; m < n; ++m) {
    if (t[m - 1] != Cardinal::finite(0)) {
      out.classes.push_back({fin_chain(m), t[m - 1]});
    }
  }
  out.classes.push_back({fin_chain(n), Cardinal::aleph(0)});
  for (const ComponentClass& c : d.classes) {
    if (const auto* f = std::get_if<FinChain>(&c.type); f && f->n > n) {
      out.classes.push_back(c);
    }
  }
  out = normalize(out);
  check_sibling(out, d, "bounded_family");
  return out;
}

bool PeriodicSet::contains(std::uint64_t n) const {
  if (n < threshold) return n < prefix.size() && prefix[n];
  return residues[n % modulus];
}

bool PeriodicSet::is_infinite() const {
  return std::any_of(residues.begin(), residues.end(), [](bool b) { return b; });
}

PeriodicSet PeriodicSet::all() { return residue(0, 1); }
PeriodicSet PeriodicSet::evens() { return residue(0, 2); }
PeriodicSet PeriodicSet::odds() { return residue(1, 2); }

PeriodicSet PeriodicSet::residue(std::uint64_t r, std::uint64_t q) {
  if (q == 0 || r >= q) fail("InvalidArgument", "residue needs r < q, q >= 1");
  PeriodicSet s;
  s.modulus = q;
  s.residues.assign(q, false);
  s.residues[r] = true;
  return s;
}

PeriodicSet PeriodicSet::parse(std::string_view text) {
  if (text == "all") return all();
  if (text == "evens") return evens();
  if (text == "odds") return odds();
  const std::size_t pct = text.find('%');
  if (pct != std::string_view::npos) {
    try {
      const std::uint64_t r = std::stoull(std::string(text.substr(0, pct)));
      const std::uint64_t q = std::stoull(std::string(text.substr(pct + 1)));
      return residue(r, q);
    } catch (const std::exception&) {
      // fall through to the error below
    }
  }
  fail("InvalidArgument",
       "index set must be all, evens, odds or <r>%<q>: " + std::string(text));
}

std::string PeriodicSet::to_string() const {
  for (std::uint64_t r = 0; r < modulus; ++r) {
    if (residues[r] && threshold == 0) {
      bool only = true;
      for (std::uint64_t s = 0; s < modulus; ++s) {
        if (s != r && residues[s]) only = false;
      }
      if (only) return std::to_string(r) + "%" + std::to_string(modulus);
    }
  }
  return "custom";
}

DscDescription qj_family(const DscDescription& din, const PeriodicSet& J) {
  const DscDescription d = normalize(din);
  if (!increasing_analysis(d).has_strictly_increasing || d.families.empty()) {
    fail("NoStrictFamily",
         to_string(d) + " has no strictly increasing family of components");
  }
  if (!J.is_infinite()) fail("FiniteJ", "the kept index set must be infinite");
  // Every finite chain of d must re-embed into the kept subsequence through
  // a countable enumeration, so the finite-size part must be countable.
  // Components of infinite size are preserved verbatim and may be anything.
  for (const ComponentClass& c : d.classes) {
    if (std::holds_alternative<FinChain>(c.type) &&
        cmp(c.mult, Cardinal::aleph(0)) == Cmp::gt) {
      fail("NotCountable",
           "uncountably many copies of " + to_string(c.type) +
               " cannot re-embed into a single kept subsequence");
    }
  }

  // The strictly increasing sequence is the first affine family; everything
  // embedding in some member (all finite chains, hence all other families
  // too) is dropped, components of infinite size are kept.
  const FinFamily fam = d.families.front();
  DscDescription out;
  for (const ComponentClass& c : d.classes) {
    if (size(c.type).is_infinite()) out.classes.push_back(c);
  }
  // Members of the family at positions in J, re-expressed as explicit
  // prefix classes plus one residual family per kept residue.
  for (std::uint64_t pos = 0; pos < J.threshold; ++pos) {
    if (J.contains(pos)) {
      out.classes.push_back({fin_chain(fam.a * pos + fam.b), Cardinal::finite(1)});
    }
  }
  for (std::uint64_t r = 0; r < J.modulus; ++r) {
    if (!J.residues[r]) continue;
    // First kept position with this residue at or beyond the threshold.
    std::uint64_t first = J.threshold + (r + J.modulus - J.threshold % J.modulus) % J.modulus;
    out.families.push_back(
        FinFamily{fam.a * J.modulus, fam.a * first + fam.b});
  }
  out = normalize(out);
  check_sibling(out, d, "qj_family");
  return out;
}

std::vector<DscDescription> component_swap_family(const DscDescription& din,
                                                  const OrderType& target,
                                                  std::uint64_t k) {
  if (k < 1) fail("InvalidArgument", "component_swap_family needs k >= 1");
  const DscDescription d = normalize(din);
  const bool occurs =
      std::any_of(d.classes.begin(), d.classes.end(), [&](const ComponentClass& c) {
        return chain_embeds(c.type, target) && chain_embeds(target, c.type);
      });
  if (!occurs) {
    fail("AbsentTarget",
         "no component of " + to_string(d) + " is equimorphic to " + to_string(target));
  }
  const std::vector<OrderType> variants = sibling_variants(target, k);

  std::vector<DscDescription> out;
  out.reserve(k);
  for (const OrderType& variant : variants) {
    DscDescription member;
    member.families = d.families;
    member.growing_aleph_tail = d.growing_aleph_tail;
    for (const ComponentClass& c : d.classes) {
      const bool swap = chain_embeds(c.type, target) && chain_embeds(target, c.type);
      member.classes.push_back({swap ? variant : c.type, c.mult});
    }
    member = normalize(member);
    check_sibling(member, d, "component_swap_family");
    out.push_back(std::move(member));
  }
  return out;
}

}  // namespace dscsib
