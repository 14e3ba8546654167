#include "reduct/geometry.hpp"

#include "reduct/errors.hpp"

#include <algorithm>
#include <thread>

namespace reduct {

namespace {

VecIndex canonical_rep(const Space& sp, VecIndex v) {
  for (uint32_t i = 0; i < sp.n(); ++i) {
    Scalar c = sp.coord(v, i);
    if (c != 0) return sp.scalar_mul(sp.finv(c), v);
  }
  errors::internal("canonical_rep of zero vector");
}

} // namespace

ProjGeometry::ProjGeometry(const Space& sp) : sp_(sp) {
  point_of_.assign(sp.size(), -1);
  std::vector<VecIndex> reps;
  for (VecIndex v = 1; v < sp.size(); ++v) {
    if (point_of_[v] >= 0) continue;
    ProjPoint pt;
    pt.rep = canonical_rep(sp, v);
    for (Scalar c = 1; c < sp.p(); ++c) pt.members.push_back(sp.scalar_mul(c, pt.rep));
    std::sort(pt.members.begin(), pt.members.end());
    for (VecIndex m : pt.members) point_of_[m] = 0;  // provisional mark
    points_.push_back(std::move(pt));
  }
  std::sort(points_.begin(), points_.end(),
            [](const ProjPoint& a, const ProjPoint& b) { return a.rep < b.rep; });
  for (size_t i = 0; i < points_.size(); ++i)
    for (VecIndex m : points_[i].members) point_of_[m] = int32_t(i);

  // projective lines = punctured 2-dim subspaces, as sorted point-id sets
  if (sp.n() >= 2) {
    for (size_t i = 0; i < points_.size(); ++i)
      for (size_t j = i + 1; j < points_.size(); ++j) {
        Subspace plane = span_of(sp_, {points_[i].rep, points_[j].rep});
        std::vector<uint32_t> ids;
        for (VecIndex m : plane.members)
          if (m != 0) ids.push_back(uint32_t(point_of_[m]));
        std::sort(ids.begin(), ids.end());
        ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
        if (line_set_.insert(ids).second) lines_.push_back(ids);
      }
    std::sort(lines_.begin(), lines_.end());
  }
}

uint32_t ProjGeometry::point_of(VecIndex v) const {
  if (v == 0 || v >= sp_.size()) errors::precondition("NotProjective", "zero vector has no projective point");
  return uint32_t(point_of_[v]);
}

bool ProjGeometry::is_line(const std::vector<uint32_t>& sorted_ids) const {
  return line_set_.count(sorted_ids) > 0;
}

ProjPerm projective_action(const ProjGeometry& pg, const Perm& g) {
  const Space& sp = pg.space();
  if (g.degree() != sp.size())
    errors::precondition("DegreeMismatch", "permutation degree does not match the space");
  if (!g.fixes(0))
    errors::precondition("PreconditionViolated", "permutation moves the zero vector");
  ProjPerm q(pg.points().size());
  std::vector<bool> hit(pg.points().size(), false);
  for (size_t i = 0; i < pg.points().size(); ++i) {
    const ProjPoint& pt = pg.points()[i];
    uint32_t target = pg.point_of(g.of(pt.members[0]));
    for (VecIndex m : pt.members)
      if (pg.point_of(g.of(m)) != target)
        errors::precondition("PreconditionViolated",
                             "image of a punctured line is not a punctured line");
    q[i] = target;
    hit[target] = true;
  }
  for (bool h : hit)
    if (!h) errors::internal("projective action not bijective");
  return q;
}

bool preserves_projective_lines(const ProjGeometry& pg, const ProjPerm& q) {
  for (const auto& line : pg.lines()) {
    std::vector<uint32_t> img;
    img.reserve(line.size());
    for (uint32_t id : line) img.push_back(q[id]);
    std::sort(img.begin(), img.end());
    if (!pg.is_line(img)) return false;
  }
  return true;
}

std::optional<Perm> ftpg_reconstruct(const ProjGeometry& pg, const ProjPerm& q) {
  const Space& sp = pg.space();
  if (sp.n() < 3)
    errors::precondition("DimensionTooSmall",
                         "projective reconstruction needs n >= 3 (n = 2 has a single line)");

  // images of the basis lines, scalars pinned via the images of <e_1 + e_i>
  std::vector<VecIndex> cols(sp.n());
  VecIndex w1 = pg.points()[q[pg.point_of(sp.basis_vector(0))]].rep;
  cols[0] = w1;
  for (uint32_t i = 1; i < sp.n(); ++i) {
    VecIndex wi = pg.points()[q[pg.point_of(sp.basis_vector(i))]].rep;
    uint32_t mixed = q[pg.point_of(sp.add(sp.basis_vector(0), sp.basis_vector(i)))];
    bool pinned = false;
    for (Scalar c = 1; c < sp.p() && !pinned; ++c) {
      VecIndex cand = sp.add(w1, sp.scalar_mul(c, wi));
      if (cand != 0 && pg.point_of(cand) == mixed) {
        cols[i] = sp.scalar_mul(c, wi);
        pinned = true;
      }
    }
    if (!pinned) return std::nullopt;  // no scalar works: q is not line-preserving
  }

  if (tuple_rank(sp, cols) != sp.n()) return std::nullopt;
  Perm cand = perm_from_linear(sp, cols);

  // verify the candidate's projective action against q on every point
  for (size_t i = 0; i < pg.points().size(); ++i)
    if (pg.point_of(cand.of(pg.points()[i].members[0])) != q[i]) return std::nullopt;
  return cand;
}

AffineLines::AffineLines(const Space& sp) {
  for (VecIndex v = 0; v < sp.size(); ++v)
    for (VecIndex w = v + 1; w < sp.size(); ++w) {
      std::vector<VecIndex> line = affine_closure(sp, {v, w});
      if (line_set_.insert(line).second) lines_.push_back(std::move(line));
    }
  std::sort(lines_.begin(), lines_.end());
}

bool AffineLines::is_line(const std::vector<VecIndex>& sorted_members) const {
  return line_set_.count(sorted_members) > 0;
}

bool preserves_affine_lines(const Space& sp, const AffineLines& lines, const Perm& g) {
  if (g.degree() != sp.size())
    errors::precondition("DegreeMismatch", "permutation degree does not match the space");
  for (const auto& line : lines.all()) {
    std::vector<VecIndex> img;
    img.reserve(line.size());
    for (VecIndex v : line) img.push_back(g.of(v));
    std::sort(img.begin(), img.end());
    if (!lines.is_line(img)) return false;
  }
  return true;
}

bool preserves_affine_lines(const Space& sp, const Perm& g) {
  AffineLines lines(sp);
  return preserves_affine_lines(sp, lines, g);
}

std::optional<AffineDecomposition> ftag_decompose(const Space& sp, const Perm& g) {
  if (g.degree() != sp.size())
    errors::precondition("DegreeMismatch", "permutation degree does not match the space");
  VecIndex t = g.of(0);
  // candidate linear factor phi(x) = g(x) - t; check it is linear
  std::vector<VecIndex> cols(sp.n());
  for (uint32_t i = 0; i < sp.n(); ++i) cols[i] = sp.sub(g.of(sp.basis_vector(i)), t);
  if (tuple_rank(sp, cols) != sp.n()) return std::nullopt;
  Perm lin = perm_from_linear(sp, cols);
  for (VecIndex v = 0; v < sp.size(); ++v)
    if (sp.add(lin.of(v), t) != g.of(v)) return std::nullopt;
  return AffineDecomposition{t, std::move(lin)};
}

PermGroup agl_group(const Space& sp, uint64_t seed) {
  PermGroup gl = gl_group(sp, seed);
  PermGroup agl = adjoin(gl, {translation_perm(sp, sp.basis_vector(0))}, seed);
  if (agl.order() != gl_order(sp) * sp.size())
    errors::internal("AGL order mismatch: chain says " + to_decimal(agl.order()));
  return agl;
}

bool relation_r_holds(const Space& sp, VecIndex a, VecIndex b, VecIndex c, VecIndex d) {
  return sp.add(a, b) == sp.add(c, d);
}

namespace {

uint64_t factorial_u64(uint32_t n) {
  uint64_t f = 1;
  for (uint32_t i = 2; i <= n; ++i) f *= i;
  return f;
}

// permutation of [0, n) with the given lexicographic rank
std::vector<uint32_t> unrank_perm(uint32_t n, uint64_t rank) {
  std::vector<uint32_t> avail(n), out;
  for (uint32_t i = 0; i < n; ++i) avail[i] = i;
  out.reserve(n);
  for (uint32_t i = n; i > 0; --i) {
    uint64_t f = factorial_u64(i - 1);
    size_t k = size_t(rank / f);
    rank %= f;
    out.push_back(avail[k]);
    avail.erase(avail.begin() + k);
  }
  return out;
}

// preservation of R via "a+b determines c+d": for all (a,b,c) with
// d := a+b-c, require g(a)+g(b) == g(c)+g(d); early exit on first failure
bool preserves_r(const Space& sp, const std::vector<uint32_t>& img,
                 const std::vector<std::vector<VecIndex>>& add,
                 const std::vector<std::vector<VecIndex>>& sub) {
  uint32_t q = sp.size();
  for (uint32_t a = 0; a < q; ++a)
    for (uint32_t b = a; b < q; ++b) {
      VecIndex s = add[a][b];
      VecIndex gs = add[img[a]][img[b]];
      for (uint32_t c = 0; c < q; ++c) {
        VecIndex d = sub[s][c];
        if (add[img[c]][img[d]] != gs) return false;
      }
    }
  return true;
}

} // namespace

BruteAutResult brute_aut_of_r(const Space& sp, unsigned workers) {
  uint32_t q = sp.size();
  if (q > 9) errors::bounds("brute-force R filter supports p^n <= 9 (got " + std::to_string(q) + ")");
  if (workers == 0) workers = 1;

  std::vector<std::vector<VecIndex>> add(q, std::vector<VecIndex>(q)), sub = add;
  for (uint32_t a = 0; a < q; ++a)
    for (uint32_t b = 0; b < q; ++b) {
      add[a][b] = sp.add(a, b);
      sub[a][b] = sp.sub(a, b);
    }

  uint64_t total = factorial_u64(q);
  workers = std::min<unsigned>(workers, 16);
  std::vector<std::vector<Perm>> found(workers);
  auto work = [&](unsigned w) {
    uint64_t lo = total * w / workers, hi = total * (w + 1) / workers;
    if (lo >= hi) return;
    std::vector<uint32_t> img = unrank_perm(q, lo);
    for (uint64_t r = lo; r < hi; ++r) {
      if (preserves_r(sp, img, add, sub)) found[w].push_back(Perm(img));
      std::next_permutation(img.begin(), img.end());
    }
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work, w);
    for (auto& t : pool) t.join();
  }

  BruteAutResult out;
  for (auto& chunk : found)
    for (Perm& g : chunk) out.elements.push_back(std::move(g));
  // chunks are rank-ordered, so concatenation is already deterministic
  out.group = PermGroup::generate(out.elements);
  return out;
}

} // namespace reduct
