#include "dscsib/embed.hpp"

#include <algorithm>
#include <cassert>
#include <cstdint>
#include <map>
#include <queue>

#include "dscsib/error.hpp"

namespace dscsib {

std::string to_string(const Block& b) {
  if (const auto* c = std::get_if<ComponentClass>(&b)) return to_string(*c);
  return to_string(std::get<FinFamily>(b));
}

namespace {

struct Blk {
  Block block;
  Cardinal mult;
  bool family = false;
};

std::vector<Blk> blocks_of(const DscDescription& d) {
  std::vector<Blk> out;
  for (const ComponentClass& c : d.classes) {
    out.push_back({c, c.mult, false});
  }
  for (const FinFamily& f : d.families) {
    out.push_back({f, Cardinal::aleph(0), true});
  }
  return out;
}

const OrderType& type_of(const Blk& b) {
  return std::get<ComponentClass>(b.block).type;
}

/// Block compatibility. A target family hosts any finite chain (its member
/// sizes are unbounded) and any source family, never an infinite chain. A
/// source family needs a target whose type admits arbitrarily large finite
/// chains, so a class target must have infinite size.
bool compatible(const Blk& s, const Blk& t) {
  if (!s.family && !t.family) return chain_embeds(type_of(s), type_of(t));
  if (!s.family && t.family) {
    return std::holds_alternative<FinChain>(type_of(s));
  }
  if (s.family && !t.family) return size(type_of(t)).is_infinite();
  return true;
}

Cardinal supply_of(const std::vector<Blk>& dst, std::uint64_t target_mask) {
  std::vector<Cardinal> parts;
  for (std::size_t j = 0; j < dst.size(); ++j) {
    if (target_mask & (std::uint64_t{1} << j)) parts.push_back(dst[j].mult);
  }
  if (parts.empty()) return Cardinal::finite(0);
  return sum(parts);
}

/// Max-flow (Edmonds-Karp) feasibility for the finite-multiplicity sources.
/// Infinite-multiplicity targets get capacity equal to the total finite
/// demand, which they absorb without bound.
struct FiniteFlow {
  std::size_t n;
  std::vector<std::vector<std::uint64_t>> cap;

  explicit FiniteFlow(std::size_t nodes)
      : n(nodes), cap(nodes, std::vector<std::uint64_t>(nodes, 0)) {}

  std::uint64_t run(std::size_t s, std::size_t t) {
    std::uint64_t flow = 0;
    while (true) {
      std::vector<int> parent(n, -1);
      parent[s] = static_cast<int>(s);
      std::queue<std::size_t> bfs;
      bfs.push(s);
      while (!bfs.empty() && parent[t] == -1) {
        const std::size_t u = bfs.front();
        bfs.pop();
        for (std::size_t v = 0; v < n; ++v) {
          if (parent[v] == -1 && cap[u][v] > 0) {
            parent[v] = static_cast<int>(u);
            bfs.push(v);
          }
        }
      }
      if (parent[t] == -1) return flow;
      std::uint64_t push = UINT64_MAX;
      for (std::size_t v = t; v != s; v = static_cast<std::size_t>(parent[v])) {
        push = std::min(push, cap[static_cast<std::size_t>(parent[v])][v]);
      }
      for (std::size_t v = t; v != s; v = static_cast<std::size_t>(parent[v])) {
        const auto u = static_cast<std::size_t>(parent[v]);
        cap[u][v] -= push;
        cap[v][u] += push;
      }
      flow += push;
    }
  }
};

Assignment build_assignment(const std::vector<Blk>& src, const std::vector<Blk>& dst,
                            const std::vector<std::uint64_t>& compat_mask) {
  Assignment a;

  // An infinite source block must fit inside a single compatible target of
  // at least its multiplicity: the Hall supply of the singleton subset is a
  // finite absorption sum, so its value is attained by one member. Infinite
  // transfers do not consume capacity under absorption arithmetic.
  for (std::size_t i = 0; i < src.size(); ++i) {
    if (src[i].mult.is_finite()) continue;
    bool placed = false;
    for (std::size_t j = 0; j < dst.size() && !placed; ++j) {
      if (!(compat_mask[i] & (std::uint64_t{1} << j))) continue;
      if (cmp(dst[j].mult, src[i].mult) == Cmp::lt) continue;
      a.transfers.push_back({src[i].block, dst[j].block, src[i].mult});
      placed = true;
    }
    assert(placed);
  }

  // Finite sources share finite target capacity; route them with max-flow.
  std::uint64_t total = 0;
  for (const Blk& s : src) {
    if (s.mult.is_finite()) total += s.mult.finite_value();
  }
  if (total == 0) return a;

  const std::size_t ns = src.size();
  const std::size_t nt = dst.size();
  FiniteFlow flow(ns + nt + 2);
  const std::size_t source_node = ns + nt;
  const std::size_t sink_node = ns + nt + 1;
  for (std::size_t i = 0; i < ns; ++i) {
    if (!src[i].mult.is_finite()) continue;
    flow.cap[source_node][i] = src[i].mult.finite_value();
    for (std::size_t j = 0; j < nt; ++j) {
      if (compat_mask[i] & (std::uint64_t{1} << j)) flow.cap[i][ns + j] = total;
    }
  }
  for (std::size_t j = 0; j < nt; ++j) {
    flow.cap[ns + j][sink_node] =
        dst[j].mult.is_finite() ? dst[j].mult.finite_value() : total;
  }
  std::vector<std::vector<std::uint64_t>> original = flow.cap;
  const std::uint64_t pushed = flow.run(source_node, sink_node);
  assert(pushed == total);
  (void)pushed;

  for (std::size_t i = 0; i < ns; ++i) {
    if (!src[i].mult.is_finite()) continue;
    for (std::size_t j = 0; j < nt; ++j) {
      const std::uint64_t used = original[i][ns + j] - flow.cap[i][ns + j];
      if (used > 0) {
        a.transfers.push_back({src[i].block, dst[j].block, Cardinal::finite(used)});
      }
    }
  }
  return a;
}

}  // namespace

bool validate(const Assignment& a, const DscDescription& d1_in,
              const DscDescription& d2_in) {
  const DscDescription d1 = normalize(d1_in);
  const DscDescription d2 = normalize(d2_in);
  const std::vector<Blk> src = blocks_of(d1);
  const std::vector<Blk> dst = blocks_of(d2);

  // Identical blocks (repeated families) are interchangeable; aggregate by
  // rendered block identity on both sides.
  auto key = [](const Block& b) { return to_string(b); };
  std::map<std::string, std::vector<Cardinal>> expected_out, capacity;
  std::map<std::string, const Blk*> src_by_key, dst_by_key;
  for (const Blk& s : src) {
    expected_out[key(s.block)].push_back(s.mult);
    src_by_key[key(s.block)] = &s;
  }
  for (const Blk& t : dst) {
    capacity[key(t.block)].push_back(t.mult);
    dst_by_key[key(t.block)] = &t;
  }

  std::map<std::string, std::vector<Cardinal>> outgoing, incoming;
  for (const Transfer& t : a.transfers) {
    auto si = src_by_key.find(key(t.source));
    auto ti = dst_by_key.find(key(t.target));
    if (si == src_by_key.end() || ti == dst_by_key.end()) return false;
    if (!compatible(*si->second, *ti->second)) return false;
    outgoing[si->first].push_back(t.amount);
    incoming[ti->first].push_back(t.amount);
  }
  for (const auto& [k, mults] : expected_out) {
    auto it = outgoing.find(k);
    if (it == outgoing.end()) return false;
    if (sum(it->second) != sum(mults)) return false;
  }
  for (const auto& [k, amounts] : incoming) {
    if (cmp(sum(amounts), sum(capacity.at(k))) == Cmp::gt) return false;
  }
  return true;
}

EmbedResult dsc_embeds(const DscDescription& d1_in, const DscDescription& d2_in,
                       std::size_t class_cap) {
  const DscDescription d1 = normalize(d1_in);
  const DscDescription d2 = normalize(d2_in);
  if (d1.growing_aleph_tail || d2.growing_aleph_tail) {
    fail("Unsupported",
         "embedding is not decided for growing-aleph tail schemas");
  }
  const std::vector<Blk> src = blocks_of(d1);
  const std::vector<Blk> dst = blocks_of(d2);
  if (src.size() > class_cap || dst.size() > class_cap) {
    fail("TooManyClasses", "subset scan limited to " + std::to_string(class_cap) +
                               " component classes");
  }
  if (src.empty()) return {true, Assignment{}};

  std::vector<std::uint64_t> compat_mask(src.size(), 0);
  for (std::size_t i = 0; i < src.size(); ++i) {
    for (std::size_t j = 0; j < dst.size(); ++j) {
      if (compatible(src[i], dst[j])) compat_mask[i] |= std::uint64_t{1} << j;
    }
  }

  // Hall condition over all non-empty subsets of source blocks.
  const std::uint64_t full = std::uint64_t{1} << src.size();
  for (std::uint64_t subset = 1; subset < full; ++subset) {
    std::vector<Cardinal> demand_parts;
    std::uint64_t targets = 0;
    for (std::size_t i = 0; i < src.size(); ++i) {
      if (subset & (std::uint64_t{1} << i)) {
        demand_parts.push_back(src[i].mult);
        targets |= compat_mask[i];
      }
    }
    if (cmp(sum(demand_parts), supply_of(dst, targets)) == Cmp::gt) {
      return {false, std::nullopt};
    }
  }

  Assignment a = build_assignment(src, dst, compat_mask);
  assert(validate(a, d1, d2));
  return {true, std::move(a)};
}

bool equimorphic(const DscDescription& d1, const DscDescription& d2,
                 std::size_t class_cap) {
  return dsc_embeds(d1, d2, class_cap).embeds &&
         dsc_embeds(d2, d1, class_cap).embeds;
}

}  // namespace dscsib
