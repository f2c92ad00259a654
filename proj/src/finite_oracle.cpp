#include "dscsib/finite_oracle.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "dscsib/error.hpp"

namespace dscsib {

FinitePoset::FinitePoset(std::vector<std::uint64_t> chain_sizes, std::uint64_t cap)
    : chains_(std::move(chain_sizes)) {
  for (std::uint64_t s : chains_) {
    if (s == 0) fail("InvalidArgument", "chains have size >= 1");
    total_ += s;
  }
  if (total_ > cap) {
    fail("CapExceeded", "poset size " + std::to_string(total_) +
                            " exceeds cap " + std::to_string(cap));
  }
}

std::pair<std::size_t, std::uint64_t> FinitePoset::locate(std::size_t e) const {
  std::size_t chain = 0;
  while (e >= chains_[chain]) {
    e -= chains_[chain];
    ++chain;
  }
  return {chain, e};
}

namespace {

struct Searcher {
  const FinitePoset& p;
  const FinitePoset& q;
  std::uint64_t budget;
  const std::function<bool(const ElementMap&)>* visit;

  // target chain chosen for each source chain, -1 when unassigned
  std::vector<int> chain_image;
  // which source chain occupies each target chain, -1 when free
  std::vector<int> chain_owner;
  // position of the previous element's image within the target chain
  std::vector<std::uint64_t> last_pos;
  std::vector<std::size_t> q_chain_start;
  ElementMap emap;
  std::uint64_t visited = 0;
  bool stop = false;

  Searcher(const FinitePoset& p_, const FinitePoset& q_, std::uint64_t budget_,
           const std::function<bool(const ElementMap&)>* visit_)
      : p(p_), q(q_), budget(budget_), visit(visit_) {
    chain_image.assign(p.chains().size(), -1);
    chain_owner.assign(q.chains().size(), -1);
    last_pos.assign(p.chains().size(), 0);
    emap.assign(p.total_size(), 0);
    std::size_t offset = 0;
    for (std::uint64_t s : q.chains()) {
      q_chain_start.push_back(offset);
      offset += s;
    }
  }

  void emit() {
    ++visited;
    if (visit != nullptr && !(*visit)(emap)) stop = true;
    if (visited >= budget) stop = true;
  }

  void place(std::size_t ci, std::uint64_t pi, std::size_t elem) {
    if (stop) return;
    if (ci == p.chains().size()) {
      emit();
      return;
    }
    if (pi == p.chains()[ci]) {
      place(ci + 1, 0, elem);
      return;
    }
    const std::uint64_t remaining = p.chains()[ci] - pi;

    if (pi == 0) {
      // First element of a source chain: pick a free target chain. Free
      // target chains of equal size are interchangeable, so only the first
      // of each size is tried.
      std::set<std::uint64_t> tried_sizes;
      for (std::size_t t = 0; t < q.chains().size(); ++t) {
        if (chain_owner[t] != -1) continue;
        if (q.chains()[t] < remaining) continue;
        if (!tried_sizes.insert(q.chains()[t]).second) continue;
        chain_owner[t] = static_cast<int>(ci);
        chain_image[ci] = static_cast<int>(t);
        for (std::uint64_t pos = 0; pos + remaining <= q.chains()[t]; ++pos) {
          emap[elem] = q_chain_start[t] + pos;
          last_pos[ci] = pos;
          place(ci, pi + 1, elem + 1);
          if (stop) break;
        }
        chain_owner[t] = -1;
        chain_image[ci] = -1;
        if (stop) break;
      }
      return;
    }

    const auto t = static_cast<std::size_t>(chain_image[ci]);
    for (std::uint64_t pos = last_pos[ci] + 1;
         pos + (remaining - 1) < q.chains()[t]; ++pos) {
      const std::uint64_t saved = last_pos[ci];
      emap[elem] = q_chain_start[t] + pos;
      last_pos[ci] = pos;
      place(ci, pi + 1, elem + 1);
      last_pos[ci] = saved;
      if (stop) break;
    }
  }
};

}  // namespace

BruteEmbedResult brute_embeds(const FinitePoset& p, const FinitePoset& q) {
  if (p.total_size() == 0) return {true, ElementMap{}};
  BruteEmbedResult result;
  std::function<bool(const ElementMap&)> grab = [&](const ElementMap& m) {
    result.embeds = true;
    result.witness = m;
    return false;  // one witness suffices
  };
  Searcher s(p, q, 1, &grab);
  s.place(0, 0, 0);
  return result;
}

std::uint64_t for_each_embedding(const FinitePoset& p, const FinitePoset& q,
                                 std::uint64_t budget,
                                 const std::function<bool(const ElementMap&)>& visit) {
  if (p.total_size() == 0) return 0;
  Searcher s(p, q, budget, &visit);
  s.place(0, 0, 0);
  return s.visited;
}

bool brute_iso(const FinitePoset& p, const FinitePoset& q) {
  std::vector<std::uint64_t> a = p.chains();
  std::vector<std::uint64_t> b = q.chains();
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a == b;
}

MutualEmbedSweep check_mutual_embed_implies_iso(std::uint64_t cap) {
  MutualEmbedSweep report;
  const auto multisets = all_chain_multisets(cap);
  std::vector<FinitePoset> posets;
  posets.reserve(multisets.size());
  for (const auto& m : multisets) posets.emplace_back(m, cap);

  for (const FinitePoset& p : posets) {
    for (const FinitePoset& q : posets) {
      ++report.pairs_checked;
      if (!brute_embeds(p, q).embeds) continue;
      if (!brute_embeds(q, p).embeds) continue;
      ++report.mutual_pairs;
      if (!brute_iso(p, q)) {
        report.counterexamples.emplace_back(p.chains(), q.chains());
      }
    }
  }
  return report;
}

bool induced_injection_check(const FinitePoset& p, const FinitePoset& q,
                             std::uint64_t witness_budget) {
  if (!brute_embeds(p, q).embeds) {
    fail("InvalidArgument", "induced_injection_check needs an embedding");
  }
  bool all_good = true;
  for_each_embedding(p, q, witness_budget, [&](const ElementMap& m) {
    // Recover the component map from the raw element map and check the two
    // properties it is supposed to have.
    std::map<std::size_t, std::size_t> induced;
    std::set<std::size_t> used_targets;
    for (std::size_t e = 0; e < m.size(); ++e) {
      const auto [src_chain, src_pos] = p.locate(e);
      const auto [dst_chain, dst_pos] = q.locate(m[e]);
      (void)src_pos;
      (void)dst_pos;
      auto [it, fresh] = induced.emplace(src_chain, dst_chain);
      if (!fresh && it->second != dst_chain) {
        all_good = false;  // not well defined
        return false;
      }
      if (fresh && !used_targets.insert(dst_chain).second) {
        all_good = false;  // not injective
        return false;
      }
    }
    return true;
  });
  return all_good;
}

namespace {

void partitions_into(std::uint64_t total, std::uint64_t max_part,
                     std::vector<std::uint64_t>& current,
                     std::vector<std::vector<std::uint64_t>>& out) {
  if (total == 0) {
    out.push_back(current);
    return;
  }
  for (std::uint64_t part = std::min(total, max_part); part >= 1; --part) {
    current.push_back(part);
    partitions_into(total - part, part, current, out);
    current.pop_back();
  }
}

}  // namespace

std::vector<std::vector<std::uint64_t>> all_chain_multisets(std::uint64_t max_total) {
  std::vector<std::vector<std::uint64_t>> out;
  std::vector<std::uint64_t> current;
  for (std::uint64_t total = 1; total <= max_total; ++total) {
    partitions_into(total, total, current, out);
  }
  return out;
}

}  // namespace dscsib
