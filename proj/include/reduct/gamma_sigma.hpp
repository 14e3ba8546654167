#ifndef REDUCT_GAMMA_SIGMA_HPP
#define REDUCT_GAMMA_SIGMA_HPP

#include "reduct/field_space.hpp"
#include "reduct/perm.hpp"
#include "reduct/perm_group.hpp"

#include <cstdint>
#include <vector>

namespace reduct {

/// Multiplicative subgroup of F_p^x, elements sorted, always containing 1.
class GammaSubgroup {
public:
  GammaSubgroup(uint32_t p, std::vector<Scalar> elements);

  uint32_t p() const { return p_; }
  const std::vector<Scalar>& elements() const { return elems_; }
  uint32_t size() const { return uint32_t(elems_.size()); }
  bool is_full() const { return elems_.size() == p_ - 1; }

  bool contains(Scalar c) const { return pos_[c % p_] >= 0; }
  uint32_t pos(Scalar c) const;  // position of c in elements()
  Scalar at(uint32_t i) const { return elems_[i]; }
  Scalar mul(Scalar a, Scalar b) const { return (a * b) % p_; }
  Scalar inv(Scalar a) const;

  bool operator==(const GammaSubgroup& o) const { return p_ == o.p_ && elems_ == o.elems_; }

private:
  uint32_t p_;
  std::vector<Scalar> elems_;
  std::vector<int32_t> pos_;
};

/// One subgroup per divisor of p-1, ordered by size.
std::vector<GammaSubgroup> gamma_subgroups(uint32_t p);

/// Permutation of Gamma, stored by position in GammaSubgroup::elements().
struct SigmaPerm {
  std::vector<uint32_t> img;

  static SigmaPerm identity(uint32_t size);
  SigmaPerm then(const SigmaPerm& o) const;  // left-to-right
  SigmaPerm inverse() const;
  bool is_identity() const;

  auto operator<=>(const SigmaPerm&) const = default;
};

/// Multiplication-by-lambda as a permutation of Gamma (these scalar maps
/// appear in every conjugation-law application).
SigmaPerm mult_perm(const GammaSubgroup& gamma, Scalar lambda);

/// sigma as a list of Gamma-element values [sigma(g_0), sigma(g_1), ...].
std::vector<Scalar> sigma_values(const GammaSubgroup& gamma, const SigmaPerm& s);

/// Partition of V into {0} plus Gamma-orbits; classes hold the nonzero
/// classes only, sorted by least member ("representative").
struct ClassPartition {
  uint32_t p = 0, n = 0;
  GammaSubgroup gamma;
  std::vector<std::vector<VecIndex>> classes;  // each sorted
  std::vector<int32_t> class_of;               // -1 for the zero vector

  /// Blocks including {0}, for kernel-of-action computations.
  std::vector<std::vector<uint32_t>> blocks_with_zero() const;
};

ClassPartition sim_classes(const Space& sp, const GammaSubgroup& gamma);

/// Gamma-labelling f: V \ {0} -> Gamma with f(lambda v) = lambda f(v).
struct Labelling {
  GammaSubgroup gamma;
  std::vector<Scalar> label;  // label[0] unused

  Scalar operator()(VecIndex v) const { return label[v]; }
};

/// Deterministic labelling: each class's least member gets label 1.
Labelling make_labelling(const Space& sp, const ClassPartition& part);

/// Gamma = { lambda : v ~_G lambda v } via the pair-orbit criterion, with
/// independence of the base vector verified on sample vectors. Requires G to
/// fix 0 and contain Aut(V).
GammaSubgroup compute_gamma(const Space& sp, const PermGroup& g);

/// How g acts on the labels of the class of v (Gamma-permutation
/// lambda -> f((lambda (v / f(v)))^g)). Throws NotClassCompatible when g does
/// not map the class of v onto a class.
SigmaPerm sigma_of(const Space& sp, const ClassPartition& part, const Labelling& f, const Perm& g,
                   VecIndex v);

/// Permutation acting only inside class c, sending the member with label
/// lambda to the member with label s(lambda).
Perm lift_on_class(const Space& sp, const ClassPartition& part, const Labelling& f, size_t cls,
                   const SigmaPerm& s);

/// Apply s on the labels of every class simultaneously.
Perm global_label_action(const Space& sp, const ClassPartition& part, const Labelling& f,
                         const SigmaPerm& s);

/// For a class permutation pi (indices into part.classes), the label-
/// preserving lift: x -> the member of pi([x]) with label f(x).
Perm label_preserving_lift(const Space& sp, const ClassPartition& part, const Labelling& f,
                           const std::vector<uint32_t>& pi);

/// Sym((V\{0})/~)^f: all label-preserving, class-permuting permutations
/// fixing 0; order (#classes)! verified via the chain.
PermGroup sym_f_group(const Space& sp, const ClassPartition& part, const Labelling& f,
                      uint64_t seed = kChainSeed);

} // namespace reduct

#endif
