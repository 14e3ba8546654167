#ifndef REDUCT_INTERVAL_ENUM_HPP
#define REDUCT_INTERVAL_ENUM_HPP

#include "reduct/classification.hpp"
#include "reduct/field_space.hpp"
#include "reduct/perm_group.hpp"

#include <cstdint>
#include <vector>

namespace reduct {

/// Exhaustive enumeration of the overgroup interval [GL(n,p), Sym(p^n)]:
/// BFS over joins with single new elements, pruned by K-conjugacy.
struct IntervalEntry {
  PermGroup group;
  GroupFingerprint fp;
  ClassificationRecord record;
};

struct IntervalReport {
  uint32_t p = 0, n = 0;
  std::vector<IntervalEntry> groups;  // pairwise non-equal, sorted canonically
  // cross-check against a catalog (indices into catalog.groups / groups)
  std::vector<std::pair<size_t, size_t>> matched;  // (catalog idx, enumerated idx)
  std::vector<size_t> unmatched_catalog;           // catalog groups with no partner
  std::vector<size_t> unmatched_enumerated;        // no catalog partner or UNCLASSIFIED
  double wall_seconds = 0.0;                       // reported, not serialized canonically
};

/// p^n <= 9 unless allow_large is set explicitly (the BFS is exponential
/// in principle).
IntervalReport enumerate_overgroups(const Space& sp, uint64_t seed = kChainSeed,
                                    bool allow_large = false);

void cross_check(IntervalReport& report, const CatalogResult& cat);

} // namespace reduct

#endif
