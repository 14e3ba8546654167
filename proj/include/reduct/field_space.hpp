#ifndef REDUCT_FIELD_SPACE_HPP
#define REDUCT_FIELD_SPACE_HPP

#include <cstdint>
#include <vector>

namespace reduct {

using Scalar = uint32_t;    // element of F_p, canonical value in [0, p)
using VecIndex = uint32_t;  // vector of F_p^n, encoded as integer in [0, p^n)

constexpr uint32_t kMaxPrime = 31;
constexpr uint32_t kDefaultMaxPoints = 243;  // 3^5; geometry-heavy paths stay small

bool is_prime(uint32_t m);

/// Least generator of F_p^x.
Scalar primitive_root(uint32_t p);

/// F_p^n with all vectors index-encoded: index = sum coords[i] * p^i
/// (little-endian, coords[0] least significant). Values are immutable and
/// cheap to copy; arithmetic works directly on indices.
class Space {
public:
  Space(uint32_t p, uint32_t n, uint32_t max_points = kDefaultMaxPoints);

  uint32_t p() const { return p_; }
  uint32_t n() const { return n_; }
  uint32_t size() const { return size_; }  // p^n

  VecIndex encode(const std::vector<Scalar>& coords) const;
  std::vector<Scalar> decode(VecIndex v) const;
  Scalar coord(VecIndex v, uint32_t i) const;

  VecIndex add(VecIndex a, VecIndex b) const;
  VecIndex sub(VecIndex a, VecIndex b) const;
  VecIndex neg(VecIndex a) const;
  VecIndex scalar_mul(Scalar c, VecIndex a) const;

  VecIndex basis_vector(uint32_t i) const;  // e_i

  Scalar fadd(Scalar a, Scalar b) const { return (a + b) % p_; }
  Scalar fmul(Scalar a, Scalar b) const { return (a * b) % p_; }
  Scalar fneg(Scalar a) const { return (p_ - a % p_) % p_; }
  Scalar finv(Scalar a) const;

  /// True iff b is a scalar multiple of a (i.e. <a> = <b> for nonzero a, b).
  bool collinear(VecIndex a, VecIndex b) const;

private:
  uint32_t p_, n_, size_;
  std::vector<uint32_t> pow_;  // p^0 .. p^n
};

/// Subspace with echelonized basis and fully materialized member set.
struct Subspace {
  std::vector<VecIndex> basis;    // row-reduced echelon, by leading coordinate
  std::vector<VecIndex> members;  // sorted, always contains 0
  std::vector<bool> mask;         // size p^n membership mask
  uint32_t dim = 0;

  bool contains(VecIndex v) const { return mask[v]; }
};

Subspace span_of(const Space& sp, const std::vector<VecIndex>& s);

bool linearly_independent(const Space& sp, const std::vector<VecIndex>& tuple);

/// Dimension of the span of the components of a tuple.
uint32_t tuple_rank(const Space& sp, const std::vector<VecIndex>& tuple);

/// All affine combinations of S (sum of coefficients = 1). S must be nonempty.
std::vector<VecIndex> affine_closure(const Space& sp, const std::vector<VecIndex>& s);

/// Least superset of S closed under two-element affine closure; for odd p this
/// equals affine_closure(S) and the fixpoint iteration is the independent route.
std::vector<VecIndex> line_closure(const Space& sp, const std::vector<VecIndex>& s);

/// True iff the (sorted, distinct) member set is an affine subspace.
bool is_affine_subspace(const Space& sp, const std::vector<VecIndex>& members);

} // namespace reduct

#endif
