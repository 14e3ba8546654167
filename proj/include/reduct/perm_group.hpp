#ifndef REDUCT_PERM_GROUP_HPP
#define REDUCT_PERM_GROUP_HPP

#include "reduct/bigcount.hpp"
#include "reduct/field_space.hpp"
#include "reduct/perm.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace reduct {

constexpr uint64_t kChainSeed = 1;

/// Finitely generated permutation group with a verified stabilizer chain.
///
/// The chain is built by a randomized Schreier-style pass (seeded, for speed)
/// followed by a deterministic verification pass that strips every Schreier
/// generator to the identity, so order and membership are exact regardless of
/// the seed. Base points are chosen in the order 1, 2, ..., degree-1, 0 (zero
/// last) unless a prefix is forced; chains of zero-fixing groups and their
/// overgroups then share base prefixes.
///
/// Immutable after construction; safe to share across threads read-only.
class PermGroup {
public:
  struct Level {
    uint32_t base;
    std::vector<Perm> gens;       // strong generators fixing all earlier bases
    std::vector<uint32_t> orbit;  // orbit[0] == base, discovery order
    std::vector<int32_t> slot;    // point -> orbit position, -1 outside
    std::vector<Perm> trans;      // base^trans[k] == orbit[k]
    std::vector<Perm> trans_inv;
  };

  static PermGroup generate(std::vector<Perm> gens, uint64_t seed = kChainSeed);
  /// Force the chain's base to start with base_prefix (levels are created for
  /// every prefix point, trivial orbits included).
  static PermGroup generate_with_base(std::vector<Perm> gens, std::vector<uint32_t> base_prefix,
                                      uint64_t seed = kChainSeed);
  static PermGroup trivial_group(uint32_t degree);

  uint32_t degree() const { return degree_; }
  const BigCount& order() const { return order_; }
  const std::vector<Perm>& generators() const { return gens_; }
  const std::vector<Level>& levels() const { return levels_; }

  bool contains(const Perm& g) const;
  /// Residue of g after stripping through the chain; identity iff member.
  Perm sift(Perm g) const;

  /// All elements in a deterministic order. Throws BudgetExceeded if the
  /// order exceeds the limit.
  std::vector<Perm> elements(uint64_t limit = 1000000) const;

  /// Uniformly random element (product of random transversal elements).
  Perm random_element(std::mt19937_64& rng) const;

  /// Deduplicated, sorted strong generating set (canonical for a given seed).
  std::vector<Perm> strong_generators() const;

  bool is_trivial() const { return levels_.empty(); }

  /// Degree-0 placeholder; use trivial_group / generate for real groups.
  PermGroup() = default;

private:
  uint32_t degree_ = 0;
  std::vector<Perm> gens_;
  std::vector<Level> levels_;
  BigCount order_ = 1;
};

bool fixes_point(const PermGroup& g, uint32_t x);

PermGroup join(const PermGroup& a, const PermGroup& b, uint64_t seed = kChainSeed);
PermGroup join(const PermGroup& a, const PermGroup& b, const PermGroup& c,
               uint64_t seed = kChainSeed);
/// Smallest group containing g plus the given extra generators.
PermGroup adjoin(const PermGroup& g, const std::vector<Perm>& extra, uint64_t seed = kChainSeed);

bool contains_group(const PermGroup& g, const PermGroup& h);  // h <= g
bool equal_groups(const PermGroup& a, const PermGroup& b);

std::vector<uint32_t> orbit_of(const PermGroup& g, uint32_t x);
std::vector<std::vector<uint32_t>> orbit_tuples(const PermGroup& g,
                                                const std::vector<uint32_t>& tuple,
                                                uint64_t budget = 4000000);

/// Orbit partition of the point set; orbits sorted by least element.
std::vector<std::vector<uint32_t>> orbit_partition(const std::vector<Perm>& gens, uint32_t degree);

PermGroup pointwise_stabilizer(const PermGroup& g, const std::vector<uint32_t>& s,
                               uint64_t seed = kChainSeed);
/// Setwise stabilizer via backtrack over a chain whose base starts with S.
/// The search is bounded; practical for the small blocks this project uses.
PermGroup setwise_stabilizer(const PermGroup& g, const std::vector<uint32_t>& s,
                             uint64_t seed = kChainSeed, uint64_t node_budget = 2000000);

/// Subgroup of g fixing every block setwise. The partition must be
/// g-invariant (each generator maps blocks onto blocks).
PermGroup kernel_of_action(const PermGroup& g, const std::vector<std::vector<uint32_t>>& blocks,
                           uint64_t seed = kChainSeed);

/// Cheap equality fingerprint: (order, point-orbit sizes, ordered-pair-orbit
/// sizes, sorted strong generators). Collisions must be confirmed by
/// membership; used as a dedup fast path and canonical sort key.
struct GroupFingerprint {
  std::string order_dec;
  std::vector<uint32_t> point_orbits;
  std::vector<uint32_t> pair_orbits;
  std::vector<std::string> strong_gens;

  bool operator==(const GroupFingerprint&) const = default;
  bool operator<(const GroupFingerprint& o) const;
};
GroupFingerprint fingerprint(const PermGroup& g);

// --- constructions on F_p^n ---

/// Permutation of vector indices induced by the linear map with the given
/// images of the basis vectors (column encoding).
Perm perm_from_linear(const Space& sp, const std::vector<VecIndex>& basis_images);
Perm translation_perm(const Space& sp, VecIndex t);
Perm scalar_perm(const Space& sp, Scalar c);

/// Aut(V) = GL(n, p) acting on vector indices. Generated by all transvections
/// plus a primitive-root scaling; the chain order is verified against
/// prod_i (p^n - p^i) at construction.
PermGroup gl_group(const Space& sp, uint64_t seed = kChainSeed);
BigCount gl_order(const Space& sp);

PermGroup sym_group(uint32_t degree, uint64_t seed = kChainSeed);
PermGroup sym_fixing_zero(uint32_t degree, uint64_t seed = kChainSeed);

} // namespace reduct

#endif
