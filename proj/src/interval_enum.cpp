#include "reduct/interval_enum.hpp"

#include "reduct/errors.hpp"

#include <algorithm>
#include <chrono>

namespace reduct {

namespace {

uint64_t factorial_u64(uint32_t n) {
  uint64_t f = 1;
  for (uint32_t i = 2; i <= n; ++i) f *= i;
  return f;
}

// lexicographic rank of a permutation (Lehmer code)
uint64_t rank_perm(const Perm& g) {
  uint32_t n = g.degree();
  uint64_t rank = 0;
  std::vector<bool> used(n, false);
  for (uint32_t i = 0; i < n; ++i) {
    uint32_t smaller = 0;
    for (uint32_t x = 0; x < g.of(i); ++x)
      if (!used[x]) ++smaller;
    rank += smaller * factorial_u64(n - i - 1);
    used[g.of(i)] = true;
  }
  return rank;
}

Perm unrank_perm(uint32_t n, uint64_t rank) {
  std::vector<uint32_t> avail(n), img;
  for (uint32_t i = 0; i < n; ++i) avail[i] = i;
  img.reserve(n);
  for (uint32_t i = n; i > 0; --i) {
    uint64_t f = factorial_u64(i - 1);
    size_t k = size_t(rank / f);
    rank %= f;
    img.push_back(avail[k]);
    avail.erase(avail.begin() + k);
  }
  return Perm(std::move(img));
}

} // namespace

IntervalReport enumerate_overgroups(const Space& sp, uint64_t seed, bool allow_large) {
  auto t0 = std::chrono::steady_clock::now();
  uint32_t q = sp.size();
  if (q > 9 && !allow_large)
    errors::bounds("overgroup enumeration is gated to p^n <= 9 (use the explicit override; "
                   "the BFS is exponential in principle)");
  if (q > 12) errors::bounds("overgroup enumeration cannot rank Sym(" + std::to_string(q) + ")");

  uint64_t total = factorial_u64(q);
  PermGroup gl = gl_group(sp, seed);

  std::vector<PermGroup> groups = {gl};
  auto find_or_insert = [&](PermGroup cand) -> bool {
    for (const PermGroup& g : groups)
      if (equal_groups(g, cand)) return false;
    groups.push_back(std::move(cand));
    return true;
  };

  // BFS over the overgroup lattice; joining K with one representative per
  // K-conjugacy class of outside elements is exhaustive because
  // <K, k g k^-1> = <K, g> for k in K
  for (size_t front = 0; front < groups.size(); ++front) {
    const PermGroup k = groups[front];
    if (k.order() == total) continue;
    std::vector<Perm> k_elems = k.elements(total);
    std::vector<bool> used(total, false);
    for (const Perm& e : k_elems) used[rank_perm(e)] = true;
    for (uint64_t r = 0; r < total; ++r) {
      if (used[r]) continue;
      Perm g = unrank_perm(q, r);
      find_or_insert(adjoin(k, {g}, seed));
      for (const Perm& e : k_elems) used[rank_perm(e.inverse().then(g).then(e))] = true;
    }
  }

  IntervalReport rep;
  rep.p = sp.p();
  rep.n = sp.n();
  for (PermGroup& g : groups) {
    IntervalEntry e{std::move(g), {}, {}};
    e.fp = fingerprint(e.group);
    e.record = classify(sp, e.group, seed);
    rep.groups.push_back(std::move(e));
  }
  std::sort(rep.groups.begin(), rep.groups.end(),
            [](const IntervalEntry& a, const IntervalEntry& b) { return a.fp < b.fp; });

  rep.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

void cross_check(IntervalReport& report, const CatalogResult& cat) {
  report.matched.clear();
  report.unmatched_catalog.clear();
  report.unmatched_enumerated.clear();

  std::vector<bool> enum_matched(report.groups.size(), false);
  for (size_t ci = 0; ci < cat.groups.size(); ++ci) {
    bool found = false;
    for (size_t ei = 0; ei < report.groups.size(); ++ei)
      if (equal_groups(cat.groups[ci].group, report.groups[ei].group)) {
        report.matched.emplace_back(ci, ei);
        enum_matched[ei] = true;
        found = true;
        break;
      }
    if (!found) report.unmatched_catalog.push_back(ci);
  }
  for (size_t ei = 0; ei < report.groups.size(); ++ei)
    if (!enum_matched[ei] || report.groups[ei].record.group_case == GroupCase::Unclassified)
      report.unmatched_enumerated.push_back(ei);
}

} // namespace reduct
