#include "dscsib/dsc.hpp"

#include <algorithm>

#include "dscsib/error.hpp"

namespace dscsib {

DscDescription did() {
  DscDescription d;
  d.families.push_back(FinFamily{1, 1});
  return d;
}

DscDescription normalize(const DscDescription& d) {
  DscDescription out;
  out.growing_aleph_tail = d.growing_aleph_tail;

  std::vector<ComponentClass> classes;
  for (const ComponentClass& c : d.classes) {
    if (c.mult == Cardinal::finite(0)) continue;
    classes.push_back(c);
  }
  for (const FinFamily& f : d.families) {
    if (f.b < 1) fail("InvalidArgument", "family offset must be >= 1");
    if (f.a == 0) {
      // A constant family is just a class of multiplicity aleph0.
      classes.push_back({fin_chain(f.b), Cardinal::aleph(0)});
    } else {
      out.families.push_back(f);
    }
  }

  std::stable_sort(classes.begin(), classes.end(),
                   [](const ComponentClass& x, const ComponentClass& y) {
                     return canonical_less(x.type, y.type);
                   });
  for (const ComponentClass& c : classes) {
    if (!out.classes.empty() && out.classes.back().type == c.type) {
      const Cardinal parts[] = {out.classes.back().mult, c.mult};
      out.classes.back().mult = sum(parts);
    } else {
      out.classes.push_back(c);
    }
  }
  std::sort(out.families.begin(), out.families.end());
  return out;
}

Cardinal Profile::lambda_at(std::uint64_t n) const {
  Cardinal value = Cardinal::finite(0);
  if (auto it = lambda.find(n); it != lambda.end()) value = it->second;
  std::uint64_t hits = 0;
  for (const FinFamily& f : families) {
    if (n >= f.b && (n - f.b) % f.a == 0) ++hits;
  }
  if (hits > 0) {
    const Cardinal parts[] = {value, Cardinal::finite(hits)};
    value = sum(parts);
  }
  return value;
}

std::uint64_t Profile::max_infinite_lambda_size() const {
  std::uint64_t m = 0;
  for (const auto& [size, mult] : lambda) {
    if (mult.is_infinite()) m = std::max(m, size);
  }
  return m;
}

Profile lambda_profile(const DscDescription& din) {
  const DscDescription d = normalize(din);
  Profile p;
  p.families = d.families;
  p.growing_aleph_tail = d.growing_aleph_tail;
  for (const ComponentClass& c : d.classes) {
    if (const auto* f = std::get_if<FinChain>(&c.type)) {
      auto [it, fresh] = p.lambda.emplace(f->n, c.mult);
      if (!fresh) {
        const Cardinal parts[] = {it->second, c.mult};
        it->second = sum(parts);
      }
    } else {
      p.infinite_classes.emplace_back(c.type, c.mult);
    }
  }
  p.size_unbounded = !d.families.empty() || !p.infinite_classes.empty() ||
                     d.growing_aleph_tail;
  return p;
}

IncreasingAnalysis increasing_analysis(const DscDescription& din) {
  const DscDescription d = normalize(din);
  IncreasingAnalysis r;

  // With finitely many explicit classes, an infinite sequence of distinct
  // non-trivial components needs a class of infinite multiplicity (constant
  // sequences) or one of the unbounded schemas.
  for (const ComponentClass& c : d.classes) {
    if (is_trivial(c.type) || c.mult.is_finite()) continue;
    r.has_increasing = true;
    if (size(c.type).is_infinite()) r.has_increasing_unbounded = true;
  }
  if (!d.families.empty() || d.growing_aleph_tail) {
    r.has_increasing = true;
    r.has_strictly_increasing = true;
    r.has_increasing_unbounded = true;
  }
  return r;
}

Cardinal disjoint_increasing_capacity(const DscDescription& din) {
  const DscDescription d = normalize(din);
  std::vector<Cardinal> contributors;
  for (const ComponentClass& c : d.classes) {
    if (!is_trivial(c.type) && c.mult.is_infinite()) {
      contributors.push_back(c.mult);
    }
  }
  for (std::size_t i = 0; i < d.families.size(); ++i) {
    contributors.push_back(Cardinal::aleph(0));
  }
  if (d.growing_aleph_tail) {
    if (contributors.empty()) contributors.push_back(Cardinal::finite(0));
    return sum(contributors, SumTail::unbounded_alephs);
  }
  if (contributors.empty()) return Cardinal::finite(0);
  return sum(contributors);
}

DscDescription nontrivial_part(const DscDescription& din) {
  const DscDescription d = normalize(din);
  DscDescription out;
  out.growing_aleph_tail = d.growing_aleph_tail;
  for (const ComponentClass& c : d.classes) {
    if (!is_trivial(c.type)) out.classes.push_back(c);
  }
  for (const FinFamily& f : d.families) {
    // Drop the singleton member of families starting at size 1.
    out.families.push_back(f.b == 1 ? FinFamily{f.a, f.a + 1} : f);
  }
  return normalize(out);
}

DscDescription restrict_sizes_above(const DscDescription& din, std::uint64_t m) {
  const DscDescription d = normalize(din);
  DscDescription out;
  out.growing_aleph_tail = d.growing_aleph_tail;
  for (const ComponentClass& c : d.classes) {
    const Cardinal s = size(c.type);
    if (s.is_infinite() || s.finite_value() > m) out.classes.push_back(c);
  }
  for (const FinFamily& f : d.families) {
    if (f.b > m) {
      out.families.push_back(f);
    } else {
      const std::uint64_t steps = (m - f.b) / f.a + 1;
      out.families.push_back(FinFamily{f.a, f.b + steps * f.a});
    }
  }
  return normalize(out);
}

bool is_countable(const DscDescription& d) {
  if (d.growing_aleph_tail) return false;
  const Cardinal aleph0 = Cardinal::aleph(0);
  for (const ComponentClass& c : d.classes) {
    if (cmp(c.mult, aleph0) == Cmp::gt) return false;
    if (cmp(size(c.type), aleph0) == Cmp::gt) return false;
  }
  return true;
}

bool purely_finite(const DscDescription& d) {
  if (!d.families.empty() || d.growing_aleph_tail) return false;
  for (const ComponentClass& c : d.classes) {
    if (!std::holds_alternative<FinChain>(c.type)) return false;
    if (c.mult.is_infinite()) return false;
  }
  return true;
}

Cardinal total_multiplicity(const DscDescription& din) {
  const DscDescription d = normalize(din);
  std::vector<Cardinal> parts;
  for (const ComponentClass& c : d.classes) parts.push_back(c.mult);
  for (std::size_t i = 0; i < d.families.size(); ++i) {
    parts.push_back(Cardinal::aleph(0));
  }
  if (d.growing_aleph_tail) {
    if (parts.empty()) parts.push_back(Cardinal::finite(0));
    return sum(parts, SumTail::unbounded_alephs);
  }
  if (parts.empty()) return Cardinal::finite(0);
  return sum(parts);
}

Cardinal nontrivial_multiplicity(const DscDescription& d) {
  return total_multiplicity(nontrivial_part(d));
}

DscDescription direct_sum(const DscDescription& a, const DscDescription& b) {
  DscDescription out = a;
  out.classes.insert(out.classes.end(), b.classes.begin(), b.classes.end());
  out.families.insert(out.families.end(), b.families.begin(), b.families.end());
  out.growing_aleph_tail = a.growing_aleph_tail || b.growing_aleph_tail;
  return normalize(out);
}

DscDescription plus_singletons(const DscDescription& d, const Cardinal& count) {
  if (count == Cardinal::finite(0)) return normalize(d);
  DscDescription out = d;
  out.classes.push_back({fin_chain(1), count});
  return normalize(out);
}

namespace {

std::string chain_term_text(const OrderType& type, const Cardinal& mult) {
  // Singleton classes read as antichains.
  if (const auto* f = std::get_if<FinChain>(&type); f && f->n == 1) {
    return "A^" + mult.to_string();
  }
  std::string chain = to_string(type);
  // A compound ordinal is parenthesized unconditionally: a bare one would be
  // folded into the ordinal of the preceding term on re-parse. Plain w never
  // needs it, since it sorts before every other ordinal chain.
  if (const auto* o = std::get_if<OrdChain>(&type); o && o->alpha.is_compound()) {
    chain = "(" + chain + ")";
  }
  if (mult == Cardinal::finite(1)) return chain;
  return mult.to_string() + "*" + chain;
}

}  // namespace

std::string to_string(const ComponentClass& c) {
  return chain_term_text(c.type, c.mult);
}

std::string to_string(const FinFamily& f) {
  if (f.a == 1 && f.b == 1) return "Did";
  return "Fam(" + std::to_string(f.a) + "," + std::to_string(f.b) + ")";
}

std::string to_string(const DscDescription& d) {
  std::string out;
  for (const ComponentClass& c : d.classes) {
    if (!out.empty()) out += " + ";
    out += to_string(c);
  }
  for (const FinFamily& f : d.families) {
    if (!out.empty()) out += " + ";
    out += to_string(f);
  }
  return out;
}

}  // namespace dscsib
