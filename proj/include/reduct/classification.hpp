#ifndef REDUCT_CLASSIFICATION_HPP
#define REDUCT_CLASSIFICATION_HPP

#include "reduct/field_space.hpp"
#include "reduct/gamma_sigma.hpp"
#include "reduct/perm_group.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace reduct {

/// Subgroup of Sym(Gamma) as an explicit sorted element set.
class SigmaGroup {
public:
  SigmaGroup(GammaSubgroup gamma, std::vector<SigmaPerm> elements);
  static SigmaGroup trivial(const GammaSubgroup& gamma);
  static SigmaGroup closure(const GammaSubgroup& gamma, const std::vector<SigmaPerm>& gens);
  /// Full Sym(Gamma); |Gamma|! elements, guarded against silly sizes.
  static SigmaGroup full_symmetric(const GammaSubgroup& gamma);

  const GammaSubgroup& gamma() const { return gamma_; }
  const std::vector<SigmaPerm>& elements() const { return elems_; }
  uint32_t size() const { return uint32_t(elems_.size()); }
  bool contains(const SigmaPerm& s) const;
  bool subgroup_of(const SigmaGroup& other) const;
  bool normal_in(const SigmaGroup& h) const;
  std::vector<SigmaPerm> small_generators() const;

  /// Sorted value-list form ("one-line Gamma-permutation images").
  std::vector<std::vector<Scalar>> value_lists() const;

  bool operator==(const SigmaGroup& o) const { return elems_ == o.elems_; }

private:
  GammaSubgroup gamma_;
  std::vector<SigmaPerm> elems_;  // sorted
};

/// All subgroups of Sym(Gamma), sorted by (size, elements).
std::vector<SigmaGroup> all_sigma_subgroups(const GammaSubgroup& gamma);

/// All pairs N normal-in H <= Sym(Gamma), in canonical order.
std::vector<std::pair<SigmaGroup, SigmaGroup>> normal_pairs(const GammaSubgroup& gamma);

/// G* = the subgroup of G acting trivially on the ~-classes.
PermGroup g_star(const PermGroup& g, const ClassPartition& part, uint64_t seed = kChainSeed);

/// H = image of the sigma-map over G* (a homomorphism on G*, so the closure
/// of generator images is the exact image); N restricts to elements that are
/// the identity outside one class.
SigmaGroup extract_H(const Space& sp, const ClassPartition& part, const Labelling& f,
                     const PermGroup& gstar);
SigmaGroup extract_N(const Space& sp, const ClassPartition& part, const Labelling& f,
                     const PermGroup& gstar, uint64_t seed = kChainSeed);

/// G(N, H): all class-fixing permutations whose per-class sigma family lies
/// in a single coset Nh, h in H. Chain order is verified against the closed
/// formula (|H|/|N|) * |N|^c.
PermGroup build_g_nh(const Space& sp, const ClassPartition& part, const Labelling& f,
                     const SigmaGroup& n, const SigmaGroup& h, uint64_t seed = kChainSeed);

enum class GroupCase { Sym, Agl, Fix0Aut, Fix0Symf, Unclassified };
std::string to_string(GroupCase c);

struct ClassificationRecord {
  uint32_t p = 0, n = 0;
  std::string order;  // decimal
  bool fixes_zero = false;
  std::vector<Scalar> gamma;                       // subgroup elements
  std::optional<bool> preserves_lines;             // meaningful when gamma full
  GroupCase group_case = GroupCase::Unclassified;
  std::vector<std::vector<Scalar>> N, H;           // sigma-group value lists
  bool round_trip_ok = false;
  std::string notes;
};

/// The Figure-9 decision flow for one group containing Aut(V).
ClassificationRecord classify(const Space& sp, const PermGroup& g, uint64_t seed = kChainSeed);

struct CatalogConstruction {
  std::string kind;  // "SYM" | "AGL" | "NH_AUT" | "NH_SYMF"
  std::vector<Scalar> gamma;
  std::vector<std::vector<Scalar>> N, H;
  size_t group_index = 0;
  bool collapsed = false;      // classification differs from the parameters
  bool round_trip_ok = false;  // non-collapsed and decomposition verified
  std::string absorbed_into;   // diagnostic for collapsed constructions
};

struct CatalogGroup {
  PermGroup group;
  ClassificationRecord record;
};

struct CatalogResult {
  uint32_t p = 0, n = 0;
  std::vector<CatalogGroup> groups;  // distinct, sorted by (order, fingerprint)
  std::vector<CatalogConstruction> constructions;
};

/// Sym(V), AGL(V), and every join of G(N,H) with Aut(V) and with
/// Sym^f + Aut(V), deduplicated and classified. Never asserts completeness.
CatalogResult build_catalog(const Space& sp, uint64_t seed = kChainSeed,
                            uint32_t max_points = 27);

enum class AkShape { Empty, SubspaceImage, Full };
std::string to_string(AkShape s);

struct AkResult {
  std::vector<VecIndex> s;
  uint32_t k = 0;
  std::vector<VecIndex> set;  // A_k(S), sorted
  AkShape shape = AkShape::Empty;
  std::optional<Perm> witness;                 // maps witness_subspace onto set
  std::vector<VecIndex> witness_subspace;      // member set of W
  // kandn reporting (never asserted): needs Gamma of the group
  std::optional<uint32_t> s_class_count;
  std::optional<uint32_t> kandn_bound;  // (p^k - 1)/|Gamma| - 1
  std::optional<bool> kandn_consistent;
};

/// A_k(S) = { v : some g in G maps S and v together into a k-dim subspace },
/// computed via tuple orbits with early exit; shape classified per the
/// empty / subspace-image / full trichotomy.
AkResult a_k_set(const Space& sp, const PermGroup& g, const std::vector<VecIndex>& s, uint32_t k,
                 uint64_t budget = 2000000, uint64_t seed = kChainSeed);

/// acl(v, w) = { u : orbit of u under the stabilizer of {v, w} stays inside
/// <v, w> }. Requires <v, w> proper (the criterion is vacuous otherwise).
std::vector<VecIndex> acl_pair(const Space& sp, const PermGroup& g, VecIndex v, VecIndex w,
                               uint64_t seed = kChainSeed);

} // namespace reduct

#endif
