#include "reduct/perm_group.hpp"

#include "reduct/errors.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <unordered_set>

namespace reduct {

namespace {

std::vector<uint32_t> default_base_order(uint32_t degree) {
  // zero vector last: stabilizers of nonzero points share chain prefixes
  std::vector<uint32_t> order;
  order.reserve(degree);
  for (uint32_t i = 1; i < degree; ++i) order.push_back(i);
  order.push_back(0);
  return order;
}

/// Incremental Schreier-Sims. Strong generator sets are nested by
/// construction: a generator found while verifying level i is appended to
/// every level it fixes the base prefix of (levels 0..j). The final
/// verification pass strips every Schreier generator of every level to the
/// identity, which makes the transversal-size order product exact.
class ChainBuilder {
public:
  ChainBuilder(uint32_t degree, std::vector<uint32_t> forced_prefix)
      : deg_(degree), prefix_(std::move(forced_prefix)) {
    base_order_ = default_base_order(degree);
    std::vector<bool> in_prefix(degree, false);
    for (uint32_t q : prefix_) {
      if (q >= degree) errors::bounds("base point out of range");
      if (!in_prefix[q]) {
        in_prefix[q] = true;
        new_level(q);
      }
    }
    std::vector<uint32_t> rest;
    for (uint32_t q : base_order_)
      if (!in_prefix[q]) rest.push_back(q);
    base_order_ = prefix_;
    base_order_.insert(base_order_.end(), rest.begin(), rest.end());
  }

  void insert(const Perm& g) {
    auto [res, j] = strip(g, 0);
    if (res.is_identity()) return;
    if (j == levels_.size()) new_level(first_moved(res));
    add_strong_generator(j, res);
  }

  void verify() {
    for (int64_t i = int64_t(levels_.size()) - 1; i >= 0;) {
      int64_t restart = check_level(size_t(i));
      i = (restart < 0) ? i - 1 : restart;
    }
  }

  std::vector<PermGroup::Level> take_levels() { return std::move(levels_); }

private:
  uint32_t deg_;
  std::vector<uint32_t> prefix_;
  std::vector<uint32_t> base_order_;
  std::vector<PermGroup::Level> levels_;

  uint32_t first_moved(const Perm& g) const {
    for (uint32_t q : base_order_)
      if (!g.fixes(q)) return q;
    errors::internal("identity passed to first_moved");
  }

  void new_level(uint32_t base) {
    PermGroup::Level lv;
    lv.base = base;
    lv.orbit = {base};
    lv.slot.assign(deg_, -1);
    lv.slot[base] = 0;
    lv.trans = {Perm::identity(deg_)};
    lv.trans_inv = {Perm::identity(deg_)};
    levels_.push_back(std::move(lv));
  }

  // residue fixes the base of every level below the returned index
  std::pair<Perm, size_t> strip(Perm g, size_t from) const {
    for (size_t i = from; i < levels_.size(); ++i) {
      int32_t s = levels_[i].slot[g.of(levels_[i].base)];
      if (s < 0) return {std::move(g), i};
      g = g.then(levels_[i].trans_inv[s]);
    }
    return {std::move(g), levels_.size()};
  }

  // g fixes the bases of levels 0..j-1; register it everywhere it belongs
  void add_strong_generator(size_t j, const Perm& g) {
    for (size_t l = 0; l <= j && l < levels_.size(); ++l) {
      levels_[l].gens.push_back(g);
      extend_orbit(l);
    }
  }

  void extend_orbit(size_t l) {
    auto& lv = levels_[l];
    for (size_t k = 0; k < lv.orbit.size(); ++k) {
      for (const Perm& s : lv.gens) {
        uint32_t img = s.of(lv.orbit[k]);
        if (lv.slot[img] < 0) {
          lv.slot[img] = int32_t(lv.orbit.size());
          lv.orbit.push_back(img);
          Perm t = lv.trans[k].then(s);
          lv.trans_inv.push_back(t.inverse());
          lv.trans.push_back(std::move(t));
        }
      }
    }
  }

  // Returns -1 if every Schreier generator of the level strips to identity,
  // else the level index where verification must resume.
  int64_t check_level(size_t i) {
    auto& lv = levels_[i];
    for (size_t k = 0; k < lv.orbit.size(); ++k) {
      for (size_t si = 0; si < lv.gens.size(); ++si) {
        const Perm& s = lv.gens[si];
        int32_t t = lv.slot[s.of(lv.orbit[k])];
        Perm sg = lv.trans[k].then(s).then(lv.trans_inv[t]);
        auto [res, j] = strip(std::move(sg), i + 1);
        if (!res.is_identity()) {
          if (j == levels_.size()) new_level(first_moved(res));
          add_strong_generator(j, res);
          return int64_t(j);
        }
      }
    }
    return -1;
  }
};

} // namespace

PermGroup PermGroup::trivial_group(uint32_t degree) {
  PermGroup g;
  g.degree_ = degree;
  g.order_ = 1;
  return g;
}

PermGroup PermGroup::generate(std::vector<Perm> gens, uint64_t seed) {
  return generate_with_base(std::move(gens), {}, seed);
}

PermGroup PermGroup::generate_with_base(std::vector<Perm> gens, std::vector<uint32_t> base_prefix,
                                        uint64_t seed) {
  if (gens.empty()) errors::precondition("NoGenerators", "group needs at least one generator");
  uint32_t deg = gens[0].degree();
  for (const Perm& g : gens)
    if (g.degree() != deg) errors::precondition("DegreeMismatch", "generators of mixed degree");

  ChainBuilder b(deg, std::move(base_prefix));
  for (const Perm& g : gens) b.insert(g);
  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
  std::vector<Perm> nontrivial;
  for (const Perm& g : gens)
    if (!g.is_identity()) nontrivial.push_back(g);
  if (nontrivial.size() > 1) {
    std::uniform_int_distribution<size_t> pick(0, nontrivial.size() - 1);
    std::uniform_int_distribution<int> len(2, 8);
    for (int r = 0; r < 12; ++r) {
      Perm w = nontrivial[pick(rng)];
      int L = len(rng);
      for (int q = 0; q < L; ++q) w = w.then(nontrivial[pick(rng)]);
      b.insert(w);
    }
  }
  b.verify();

  PermGroup g;
  g.degree_ = deg;
  g.gens_ = std::move(gens);
  g.levels_ = b.take_levels();
  g.order_ = 1;
  for (const auto& lv : g.levels_) g.order_ *= uint64_t(lv.orbit.size());
  return g;
}

Perm PermGroup::sift(Perm g) const {
  for (const auto& lv : levels_) {
    int32_t s = lv.slot[g.of(lv.base)];
    if (s < 0) return g;
    g = g.then(lv.trans_inv[s]);
  }
  return g;
}

bool PermGroup::contains(const Perm& g) const {
  if (g.degree() != degree_) return false;
  return sift(g).is_identity();
}

std::vector<Perm> PermGroup::elements(uint64_t limit) const {
  if (order_ > limit)
    errors::budget("group order " + to_decimal(order_) + " exceeds element enumeration limit " +
                   std::to_string(limit));
  std::vector<Perm> out = {Perm::identity(degree_)};
  // peel levels from the deepest: G = { h * u : h in deeper subgroup }
  for (size_t li = levels_.size(); li-- > 0;) {
    std::vector<Perm> next;
    next.reserve(out.size() * levels_[li].orbit.size());
    for (const Perm& h : out)
      for (const Perm& u : levels_[li].trans) next.push_back(h.then(u));
    out = std::move(next);
  }
  return out;
}

Perm PermGroup::random_element(std::mt19937_64& rng) const {
  Perm g = Perm::identity(degree_);
  for (size_t li = levels_.size(); li-- > 0;) {
    std::uniform_int_distribution<size_t> pick(0, levels_[li].trans.size() - 1);
    g = g.then(levels_[li].trans[pick(rng)]);
  }
  return g;
}

std::vector<Perm> PermGroup::strong_generators() const {
  std::set<Perm> pool;
  for (const auto& lv : levels_)
    for (const Perm& g : lv.gens) pool.insert(g);
  return {pool.begin(), pool.end()};
}

bool fixes_point(const PermGroup& g, uint32_t x) {
  for (const Perm& s : g.generators())
    if (!s.fixes(x)) return false;
  return true;
}

PermGroup join(const PermGroup& a, const PermGroup& b, uint64_t seed) {
  if (a.degree() != b.degree()) errors::precondition("DegreeMismatch", "joining groups of different degree");
  std::vector<Perm> gens = a.generators();
  for (const Perm& g : b.generators()) gens.push_back(g);
  if (gens.empty()) return PermGroup::trivial_group(a.degree());
  return PermGroup::generate(std::move(gens), seed);
}

PermGroup join(const PermGroup& a, const PermGroup& b, const PermGroup& c, uint64_t seed) {
  return join(join(a, b, seed), c, seed);
}

PermGroup adjoin(const PermGroup& g, const std::vector<Perm>& extra, uint64_t seed) {
  std::vector<Perm> gens = g.generators();
  gens.insert(gens.end(), extra.begin(), extra.end());
  if (gens.empty()) return PermGroup::trivial_group(g.degree());
  return PermGroup::generate(std::move(gens), seed);
}

bool contains_group(const PermGroup& g, const PermGroup& h) {
  if (g.degree() != h.degree()) return false;
  for (const Perm& s : h.generators())
    if (!g.contains(s)) return false;
  return true;
}

bool equal_groups(const PermGroup& a, const PermGroup& b) {
  if (a.degree() != b.degree()) return false;
  if (a.order() != b.order()) return false;
  return contains_group(a, b);
}

std::vector<uint32_t> orbit_of(const PermGroup& g, uint32_t x) {
  std::vector<bool> seen(g.degree(), false);
  std::vector<uint32_t> orb = {x};
  seen[x] = true;
  for (size_t k = 0; k < orb.size(); ++k)
    for (const Perm& s : g.generators()) {
      uint32_t img = s.of(orb[k]);
      if (!seen[img]) {
        seen[img] = true;
        orb.push_back(img);
      }
    }
  std::sort(orb.begin(), orb.end());
  return orb;
}

std::vector<std::vector<uint32_t>> orbit_tuples(const PermGroup& g,
                                                const std::vector<uint32_t>& tuple,
                                                uint64_t budget) {
  if (tuple.size() > 8 || g.degree() > 255)
    errors::budget("tuple orbits support length <= 8 and degree <= 255");
  auto pack = [](const std::vector<uint32_t>& t) {
    uint64_t k = 0;
    for (uint32_t x : t) k = (k << 8) | x;
    return k;
  };
  std::unordered_set<uint64_t> seen;
  std::vector<std::vector<uint32_t>> orb = {tuple};
  seen.insert(pack(tuple));
  for (size_t k = 0; k < orb.size(); ++k)
    for (const Perm& s : g.generators()) {
      std::vector<uint32_t> img(orb[k].size());
      for (size_t i = 0; i < img.size(); ++i) img[i] = s.of(orb[k][i]);
      if (seen.insert(pack(img)).second) {
        if (seen.size() > budget) errors::budget("tuple orbit exceeds budget");
        orb.push_back(std::move(img));
      }
    }
  return orb;
}

std::vector<std::vector<uint32_t>> orbit_partition(const std::vector<Perm>& gens, uint32_t degree) {
  std::vector<bool> seen(degree, false);
  std::vector<std::vector<uint32_t>> parts;
  for (uint32_t x = 0; x < degree; ++x) {
    if (seen[x]) continue;
    std::vector<uint32_t> orb = {x};
    seen[x] = true;
    for (size_t k = 0; k < orb.size(); ++k)
      for (const Perm& s : gens) {
        uint32_t img = s.of(orb[k]);
        if (!seen[img]) {
          seen[img] = true;
          orb.push_back(img);
        }
      }
    std::sort(orb.begin(), orb.end());
    parts.push_back(std::move(orb));
  }
  return parts;
}

PermGroup pointwise_stabilizer(const PermGroup& g, const std::vector<uint32_t>& s, uint64_t seed) {
  std::vector<uint32_t> pts = s;
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.empty() || g.is_trivial()) return g;
  PermGroup chain = PermGroup::generate_with_base(g.generators(), pts, seed);
  if (chain.levels().size() <= pts.size()) return PermGroup::trivial_group(g.degree());
  const auto& gens = chain.levels()[pts.size()].gens;
  if (gens.empty()) return PermGroup::trivial_group(g.degree());
  return PermGroup::generate(gens, seed);
}

PermGroup setwise_stabilizer(const PermGroup& g, const std::vector<uint32_t>& s, uint64_t seed,
                             uint64_t node_budget) {
  std::vector<uint32_t> pts = s;
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.empty() || g.is_trivial()) return g;

  std::vector<bool> in_s(g.degree(), false);
  for (uint32_t q : pts) {
    if (q >= g.degree()) errors::bounds("set point out of range");
    in_s[q] = true;
  }

  // if S is a union of orbits, everything stabilizes it
  {
    bool all_inside = true;
    for (uint32_t q : pts) {
      for (uint32_t m : orbit_of(g, q))
        if (!in_s[m]) {
          all_inside = false;
          break;
        }
      if (!all_inside) break;
    }
    if (all_inside) return g;
  }

  PermGroup chain = PermGroup::generate_with_base(g.generators(), pts, seed);
  size_t m = pts.size();

  std::vector<Perm> base_gens;
  if (chain.levels().size() > m && !chain.levels()[m].gens.empty())
    base_gens = chain.levels()[m].gens;

  // backtrack over the S-prefix of the chain: an element maps S into S iff
  // the images of the first |S| base points all land in S
  std::vector<Perm> reps;
  uint64_t nodes = 0;
  Perm id = Perm::identity(g.degree());
  // iterative DFS with explicit stack of (level, accumulated suffix product)
  struct Frame {
    size_t level;
    size_t next_slot;
    Perm acc;  // u-products of shallower levels, applied after this level's u
  };
  std::vector<Frame> stack;
  stack.push_back({0, 0, id});
  while (!stack.empty()) {
    Frame& f = stack.back();
    if (f.level == m) {
      reps.push_back(f.acc);
      stack.pop_back();
      continue;
    }
    const auto& lv = chain.levels()[f.level];
    bool descended = false;
    while (f.next_slot < lv.orbit.size()) {
      size_t k = f.next_slot++;
      if (++nodes > node_budget) errors::budget("setwise stabilizer search exceeds node budget");
      if (!in_s[f.acc.of(lv.orbit[k])]) continue;
      stack.push_back({f.level + 1, 0, lv.trans[k].then(f.acc)});
      descended = true;
      break;
    }
    if (!descended) stack.pop_back();  // frame exhausted; a descend keeps it pending
  }

  PermGroup out = base_gens.empty() ? PermGroup::trivial_group(g.degree())
                                    : PermGroup::generate(base_gens, seed);
  std::sort(reps.begin(), reps.end());
  std::vector<Perm> kept = base_gens;
  for (const Perm& t : reps) {
    if (t.is_identity() || out.contains(t)) continue;
    kept.push_back(t);
    out = PermGroup::generate(kept, seed);
  }
  return out;
}

PermGroup kernel_of_action(const PermGroup& g, const std::vector<std::vector<uint32_t>>& blocks,
                           uint64_t seed) {
  // validate: blocks partition [0, degree)
  std::vector<int32_t> bid(g.degree(), -1);
  for (size_t b = 0; b < blocks.size(); ++b) {
    if (blocks[b].empty()) errors::precondition("InvalidPartition", "empty block");
    for (uint32_t x : blocks[b]) {
      if (x >= g.degree() || bid[x] >= 0)
        errors::precondition("InvalidPartition", "blocks do not partition the point set");
      bid[x] = int32_t(b);
    }
  }
  for (uint32_t x = 0; x < g.degree(); ++x)
    if (bid[x] < 0) errors::precondition("InvalidPartition", "blocks do not cover the point set");

  // the kernel of an action only exists if the group acts: each generator
  // must map blocks onto blocks
  for (const Perm& s : g.generators())
    for (const auto& blk : blocks) {
      int32_t target = bid[s.of(blk[0])];
      if (blocks[size_t(target)].size() != blk.size())
        errors::precondition("PartitionNotInvariant", "generator does not permute the blocks");
      for (uint32_t x : blk)
        if (bid[s.of(x)] != target)
          errors::precondition("PartitionNotInvariant", "generator does not permute the blocks");
    }

  std::vector<uint32_t> singles;
  std::vector<std::vector<uint32_t>> rest;
  for (const auto& blk : blocks) {
    if (blk.size() == 1)
      singles.push_back(blk[0]);
    else
      rest.push_back(blk);
  }
  std::sort(rest.begin(), rest.end(),
            [](const auto& a, const auto& b) { return a.size() != b.size() ? a.size() < b.size() : a < b; });

  PermGroup k = singles.empty() ? g : pointwise_stabilizer(g, singles, seed);
  for (const auto& blk : rest) {
    if (k.is_trivial()) break;
    k = setwise_stabilizer(k, blk, seed);
  }
  return k;
}

bool GroupFingerprint::operator<(const GroupFingerprint& o) const {
  if (order_dec.size() != o.order_dec.size()) return order_dec.size() < o.order_dec.size();
  if (order_dec != o.order_dec) return order_dec < o.order_dec;
  if (point_orbits != o.point_orbits) return point_orbits < o.point_orbits;
  if (pair_orbits != o.pair_orbits) return pair_orbits < o.pair_orbits;
  return strong_gens < o.strong_gens;
}

GroupFingerprint fingerprint(const PermGroup& g) {
  GroupFingerprint fp;
  fp.order_dec = to_decimal(g.order());
  for (const auto& orb : orbit_partition(g.generators(), g.degree()))
    fp.point_orbits.push_back(uint32_t(orb.size()));
  std::sort(fp.point_orbits.begin(), fp.point_orbits.end());

  // orbits on ordered pairs, via BFS over pair codes
  uint32_t d = g.degree();
  std::vector<bool> seen(size_t(d) * d, false);
  for (uint32_t a = 0; a < d; ++a)
    for (uint32_t b = 0; b < d; ++b) {
      size_t code = size_t(a) * d + b;
      if (seen[code]) continue;
      std::vector<size_t> orb = {code};
      seen[code] = true;
      for (size_t k = 0; k < orb.size(); ++k)
        for (const Perm& s : g.generators()) {
          size_t img = size_t(s.of(uint32_t(orb[k] / d))) * d + s.of(uint32_t(orb[k] % d));
          if (!seen[img]) {
            seen[img] = true;
            orb.push_back(img);
          }
        }
      fp.pair_orbits.push_back(uint32_t(orb.size()));
    }
  std::sort(fp.pair_orbits.begin(), fp.pair_orbits.end());

  for (const Perm& s : g.strong_generators()) fp.strong_gens.push_back(s.to_line());
  return fp;
}

Perm perm_from_linear(const Space& sp, const std::vector<VecIndex>& basis_images) {
  if (basis_images.size() != sp.n()) errors::precondition("BadMatrix", "need n basis images");
  std::vector<uint32_t> img(sp.size());
  for (VecIndex v = 0; v < sp.size(); ++v) {
    VecIndex w = 0;
    VecIndex rest = v;
    for (uint32_t i = 0; i < sp.n(); ++i) {
      Scalar c = rest % sp.p();
      rest /= sp.p();
      if (c) w = sp.add(w, sp.scalar_mul(c, basis_images[i]));
    }
    img[v] = w;
  }
  return Perm(std::move(img));  // ctor rejects singular maps
}

Perm translation_perm(const Space& sp, VecIndex t) {
  std::vector<uint32_t> img(sp.size());
  for (VecIndex v = 0; v < sp.size(); ++v) img[v] = sp.add(v, t);
  return Perm(std::move(img));
}

Perm scalar_perm(const Space& sp, Scalar c) {
  std::vector<uint32_t> img(sp.size());
  for (VecIndex v = 0; v < sp.size(); ++v) img[v] = sp.scalar_mul(c, v);
  return Perm(std::move(img));
}

BigCount gl_order(const Space& sp) {
  BigCount q = sp.size(), r = 1;
  BigCount pk = 1;
  for (uint32_t i = 0; i < sp.n(); ++i) {
    r *= (q - pk);
    pk *= sp.p();
  }
  return r;
}

PermGroup gl_group(const Space& sp, uint64_t seed) {
  std::vector<Perm> gens;
  std::vector<VecIndex> basis(sp.n());
  for (uint32_t i = 0; i < sp.n(); ++i) basis[i] = sp.basis_vector(i);

  Scalar zeta = primitive_root(sp.p());
  std::vector<VecIndex> diag = basis;
  diag[0] = sp.scalar_mul(zeta, basis[0]);
  gens.push_back(perm_from_linear(sp, diag));

  for (uint32_t i = 0; i < sp.n(); ++i)
    for (uint32_t j = 0; j < sp.n(); ++j) {
      if (i == j) continue;
      std::vector<VecIndex> cols = basis;
      cols[j] = sp.add(basis[j], basis[i]);  // transvection e_j -> e_j + e_i
      gens.push_back(perm_from_linear(sp, cols));
    }

  PermGroup g = PermGroup::generate(std::move(gens), seed);
  if (g.order() != gl_order(sp))
    errors::internal("GL(" + std::to_string(sp.n()) + "," + std::to_string(sp.p()) +
                     ") order mismatch: chain says " + to_decimal(g.order()));
  return g;
}

PermGroup sym_group(uint32_t degree, uint64_t seed) {
  if (degree < 2) return PermGroup::trivial_group(degree);
  std::vector<Perm> gens = {transposition(degree, 0, 1)};
  if (degree > 2) {
    std::vector<uint32_t> all(degree);
    for (uint32_t i = 0; i < degree; ++i) all[i] = i;
    gens.push_back(cycle(degree, all));
  }
  return PermGroup::generate(std::move(gens), seed);
}

PermGroup sym_fixing_zero(uint32_t degree, uint64_t seed) {
  if (degree < 3) return PermGroup::trivial_group(degree);
  std::vector<Perm> gens = {transposition(degree, 1, 2)};
  if (degree > 3) {
    std::vector<uint32_t> pts(degree - 1);
    for (uint32_t i = 1; i < degree; ++i) pts[i - 1] = i;
    gens.push_back(cycle(degree, pts));
  }
  return PermGroup::generate(std::move(gens), seed);
}

} // namespace reduct
