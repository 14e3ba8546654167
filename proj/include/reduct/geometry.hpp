#ifndef REDUCT_GEOMETRY_HPP
#define REDUCT_GEOMETRY_HPP

#include "reduct/field_space.hpp"
#include "reduct/perm.hpp"
#include "reduct/perm_group.hpp"

#include <cstdint>
#include <optional>
#include <set>
#include <vector>

namespace reduct {

/// One-dimensional subspace of F_p^n; rep is the canonical representative
/// (lowest nonzero coordinate normalized to 1).
struct ProjPoint {
  VecIndex rep;
  std::vector<VecIndex> members;  // the p-1 nonzero multiples, sorted
};

/// Permutation of the projective points, by position in ProjGeometry::points.
using ProjPerm = std::vector<uint32_t>;

class ProjGeometry {
public:
  explicit ProjGeometry(const Space& sp);

  const Space& space() const { return sp_; }
  const std::vector<ProjPoint>& points() const { return points_; }
  uint32_t point_of(VecIndex v) const;  // v != 0
  size_t line_count() const { return lines_.size(); }

  /// Projective lines: point-id sets of the 2-dimensional subspaces.
  const std::vector<std::vector<uint32_t>>& lines() const { return lines_; }
  bool is_line(const std::vector<uint32_t>& sorted_ids) const;

private:
  Space sp_;
  std::vector<ProjPoint> points_;
  std::vector<int32_t> point_of_;
  std::vector<std::vector<uint32_t>> lines_;
  std::set<std::vector<uint32_t>> line_set_;
};

/// Induced permutation of the projective points. Throws PreconditionViolated
/// if g moves 0 or maps some punctured line onto a non-line (which signals
/// Gamma != F_p^x or a non-class-preserving g).
ProjPerm projective_action(const ProjGeometry& pg, const Perm& g);

bool preserves_projective_lines(const ProjGeometry& pg, const ProjPerm& q);

/// Constructive finite Fundamental Theorem of Projective Geometry: if q
/// preserves projective lines, return a linear permutation inducing q
/// (e_1's image pinned to the canonical representative); otherwise nullopt.
/// The candidate is verified on every projective point before returning.
/// Requires n >= 3; n = 2 is a documented counterexample regime.
std::optional<Perm> ftpg_reconstruct(const ProjGeometry& pg, const ProjPerm& q);

/// Affine lines of the space, one entry per line, members sorted.
class AffineLines {
public:
  explicit AffineLines(const Space& sp);
  bool is_line(const std::vector<VecIndex>& sorted_members) const;
  size_t count() const { return lines_.size(); }
  const std::vector<std::vector<VecIndex>>& all() const { return lines_; }

private:
  std::vector<std::vector<VecIndex>> lines_;
  std::set<std::vector<VecIndex>> line_set_;
};

bool preserves_affine_lines(const Space& sp, const AffineLines& lines, const Perm& g);
bool preserves_affine_lines(const Space& sp, const Perm& g);

/// Fundamental Theorem of Affine Geometry, constructively: factor g as a
/// linear map followed by the translation by g(0). Returns nullopt when the
/// factor is not linear (equivalently, g does not preserve affine lines).
struct AffineDecomposition {
  VecIndex translation;
  Perm linear;
};
std::optional<AffineDecomposition> ftag_decompose(const Space& sp, const Perm& g);

/// AGL(n, p): generated by GL plus one translation; order p^n * |GL| verified.
PermGroup agl_group(const Space& sp, uint64_t seed = kChainSeed);

/// The 4-ary relation a + b = c + d.
bool relation_r_holds(const Space& sp, VecIndex a, VecIndex b, VecIndex c, VecIndex d);

struct BruteAutResult {
  std::vector<Perm> elements;  // all R-preserving permutations, sorted
  PermGroup group;
};

/// Filter all of Sym(p^n) for R-preservation; p^n <= 9 only. Parallelizes
/// over disjoint ranks with a deterministic merge.
BruteAutResult brute_aut_of_r(const Space& sp, unsigned workers = 1);

} // namespace reduct

#endif
