#include "reduct/classification.hpp"

#include "reduct/errors.hpp"
#include "reduct/geometry.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <unordered_set>

namespace reduct {

SigmaGroup::SigmaGroup(GammaSubgroup gamma, std::vector<SigmaPerm> elements)
    : gamma_(std::move(gamma)), elems_(std::move(elements)) {
  std::sort(elems_.begin(), elems_.end());
  elems_.erase(std::unique(elems_.begin(), elems_.end()), elems_.end());
  if (elems_.empty()) errors::precondition("BadSigmaGroup", "empty element set");
  // group axioms are exhaustively checkable at this size
  for (const SigmaPerm& a : elems_) {
    if (!contains(a.inverse())) errors::precondition("BadSigmaGroup", "not closed under inverse");
    for (const SigmaPerm& b : elems_)
      if (!contains(a.then(b))) errors::precondition("BadSigmaGroup", "not closed under product");
  }
}

SigmaGroup SigmaGroup::trivial(const GammaSubgroup& gamma) {
  return SigmaGroup(gamma, {SigmaPerm::identity(gamma.size())});
}

SigmaGroup SigmaGroup::closure(const GammaSubgroup& gamma, const std::vector<SigmaPerm>& gens) {
  std::set<SigmaPerm> seen;
  std::vector<SigmaPerm> queue = {SigmaPerm::identity(gamma.size())};
  seen.insert(queue[0]);
  for (const SigmaPerm& g : gens)
    if (seen.insert(g).second) queue.push_back(g);
  for (size_t k = 0; k < queue.size(); ++k)
    for (const SigmaPerm& g : gens) {
      SigmaPerm x = queue[k].then(g);
      if (seen.insert(x).second) queue.push_back(x);
    }
  return SigmaGroup(gamma, {seen.begin(), seen.end()});
}

SigmaGroup SigmaGroup::full_symmetric(const GammaSubgroup& gamma) {
  if (gamma.size() > 8) errors::bounds("Sym(Gamma) enumeration limited to |Gamma| <= 8");
  std::vector<uint32_t> idx(gamma.size());
  for (uint32_t i = 0; i < gamma.size(); ++i) idx[i] = i;
  std::vector<SigmaPerm> elems;
  do {
    elems.push_back(SigmaPerm{idx});
  } while (std::next_permutation(idx.begin(), idx.end()));
  return SigmaGroup(gamma, std::move(elems));
}

bool SigmaGroup::contains(const SigmaPerm& s) const {
  return std::binary_search(elems_.begin(), elems_.end(), s);
}

bool SigmaGroup::subgroup_of(const SigmaGroup& other) const {
  for (const SigmaPerm& s : elems_)
    if (!other.contains(s)) return false;
  return true;
}

bool SigmaGroup::normal_in(const SigmaGroup& h) const {
  if (!subgroup_of(h)) return false;
  for (const SigmaPerm& x : h.elements()) {
    SigmaPerm xi = x.inverse();
    for (const SigmaPerm& n : elems_)
      if (!contains(xi.then(n).then(x))) return false;
  }
  return true;
}

std::vector<SigmaPerm> SigmaGroup::small_generators() const {
  std::vector<SigmaPerm> gens;
  std::set<SigmaPerm> have = {SigmaPerm::identity(gamma_.size())};
  for (const SigmaPerm& s : elems_) {
    if (have.count(s)) continue;
    gens.push_back(s);
    have.clear();
    SigmaGroup c = closure(gamma_, gens);
    have.insert(c.elements().begin(), c.elements().end());
    if (have.size() == elems_.size()) break;
  }
  return gens;
}

std::vector<std::vector<Scalar>> SigmaGroup::value_lists() const {
  std::vector<std::vector<Scalar>> out;
  for (const SigmaPerm& s : elems_) out.push_back(sigma_values(gamma_, s));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<SigmaGroup> all_sigma_subgroups(const GammaSubgroup& gamma) {
  SigmaGroup full = SigmaGroup::full_symmetric(gamma);
  std::set<std::vector<SigmaPerm>> seen;
  std::vector<SigmaGroup> subs = {SigmaGroup::trivial(gamma)};
  seen.insert(subs[0].elements());
  for (size_t k = 0; k < subs.size(); ++k) {
    for (const SigmaPerm& x : full.elements()) {
      if (subs[k].contains(x)) continue;
      std::vector<SigmaPerm> gens = subs[k].small_generators();
      gens.push_back(x);
      SigmaGroup bigger = SigmaGroup::closure(gamma, gens);
      if (seen.insert(bigger.elements()).second) subs.push_back(std::move(bigger));
    }
  }
  std::sort(subs.begin(), subs.end(), [](const SigmaGroup& a, const SigmaGroup& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.elements() < b.elements();
  });
  return subs;
}

std::vector<std::pair<SigmaGroup, SigmaGroup>> normal_pairs(const GammaSubgroup& gamma) {
  std::vector<SigmaGroup> subs = all_sigma_subgroups(gamma);
  std::vector<std::pair<SigmaGroup, SigmaGroup>> pairs;
  for (const SigmaGroup& h : subs)
    for (const SigmaGroup& n : subs)
      if (n.normal_in(h)) pairs.emplace_back(n, h);
  return pairs;
}

PermGroup g_star(const PermGroup& g, const ClassPartition& part, uint64_t seed) {
  return kernel_of_action(g, part.blocks_with_zero(), seed);
}

namespace {

constexpr VecIndex kSigmaBase = 1;  // e_1; any fixed nonzero vector works

} // namespace

SigmaGroup extract_H(const Space& sp, const ClassPartition& part, const Labelling& f,
                     const PermGroup& gstar) {
  std::vector<SigmaPerm> imgs;
  for (const Perm& g : gstar.generators()) imgs.push_back(sigma_of(sp, part, f, g, kSigmaBase));
  return SigmaGroup::closure(part.gamma, imgs);
}

SigmaGroup extract_N(const Space& sp, const ClassPartition& part, const Labelling& f,
                     const PermGroup& gstar, uint64_t seed) {
  if (gstar.is_trivial()) return SigmaGroup::trivial(part.gamma);
  const auto& cls = part.classes[size_t(part.class_of[kSigmaBase])];
  std::vector<bool> in_cls(sp.size(), false);
  for (VecIndex m : cls) in_cls[m] = true;
  std::vector<uint32_t> outside;
  for (VecIndex v = 0; v < sp.size(); ++v)
    if (!in_cls[v]) outside.push_back(v);
  PermGroup k = pointwise_stabilizer(gstar, outside, seed);
  std::vector<SigmaPerm> imgs;
  for (const Perm& g : k.generators()) imgs.push_back(sigma_of(sp, part, f, g, kSigmaBase));
  return SigmaGroup::closure(part.gamma, imgs);
}

PermGroup build_g_nh(const Space& sp, const ClassPartition& part, const Labelling& f,
                     const SigmaGroup& n, const SigmaGroup& h, uint64_t seed) {
  if (!n.normal_in(h))
    errors::precondition("NotNormal", "N must be a normal subgroup of H");

  std::vector<Perm> gens;
  for (const SigmaPerm& s : n.small_generators())
    for (size_t c = 0; c < part.classes.size(); ++c)
      gens.push_back(lift_on_class(sp, part, f, c, s));
  for (const SigmaPerm& s : h.small_generators())
    gens.push_back(global_label_action(sp, part, f, s));

  PermGroup g = gens.empty() ? PermGroup::trivial_group(sp.size())
                             : PermGroup::generate(std::move(gens), seed);

  BigCount expected = BigCount(h.size() / n.size()) * big_pow(n.size(), part.classes.size());
  if (g.order() != expected)
    errors::internal("G(N,H) order " + to_decimal(g.order()) + " does not match the closed formula " +
                     to_decimal(expected));
  return g;
}

std::string to_string(GroupCase c) {
  switch (c) {
    case GroupCase::Sym: return "SYM";
    case GroupCase::Agl: return "AGL";
    case GroupCase::Fix0Aut: return "FIX0_AUT";
    case GroupCase::Fix0Symf: return "FIX0_SYMF";
    case GroupCase::Unclassified: return "UNCLASSIFIED";
  }
  return "UNCLASSIFIED";
}

ClassificationRecord classify(const Space& sp, const PermGroup& g, uint64_t seed) {
  if (g.degree() != sp.size())
    errors::precondition("DegreeMismatch", "group degree does not match the space");
  PermGroup gl = gl_group(sp, seed);
  if (!contains_group(g, gl))
    errors::precondition("MissingAutV", "group does not contain Aut(V) = GL(n,p)");

  ClassificationRecord rec;
  rec.p = sp.p();
  rec.n = sp.n();
  rec.order = to_decimal(g.order());
  rec.fixes_zero = fixes_point(g, 0);

  if (!rec.fixes_zero) {
    PermGroup g0 = pointwise_stabilizer(g, {0}, seed);
    rec.gamma = compute_gamma(sp, g0).elements();
    if (equal_groups(g, sym_group(sp.size(), seed))) {
      rec.group_case = GroupCase::Sym;
      rec.round_trip_ok = true;
    } else if (equal_groups(g, agl_group(sp, seed))) {
      rec.group_case = GroupCase::Agl;
      rec.round_trip_ok = true;
    } else {
      rec.group_case = GroupCase::Unclassified;
      rec.notes = "moves 0 but equals neither Sym(V) nor AGL(V)";
    }
    return rec;
  }

  GammaSubgroup gamma = compute_gamma(sp, g);
  rec.gamma = gamma.elements();
  ClassPartition part = sim_classes(sp, gamma);
  Labelling f = make_labelling(sp, part);

  if (gamma.is_full()) {
    // line preservation on generators only; composition closure justifies it
    ProjGeometry pg(sp);
    bool pl = true;
    for (const Perm& s : g.generators())
      if (!preserves_projective_lines(pg, projective_action(pg, s))) {
        pl = false;
        break;
      }
    rec.preserves_lines = pl;
  }

  PermGroup gstar = g_star(g, part, seed);
  SigmaGroup h = extract_H(sp, part, f, gstar);
  SigmaGroup n = extract_N(sp, part, f, gstar, seed);
  if (!n.normal_in(h))
    errors::internal("extracted N is not normal in extracted H");
  rec.N = n.value_lists();
  rec.H = h.value_lists();

  PermGroup gnh = build_g_nh(sp, part, f, n, h, seed);
  if (rec.preserves_lines.value_or(false)) {
    PermGroup expected = join(gnh, gl, seed);
    if (equal_groups(g, expected)) {
      rec.group_case = GroupCase::Fix0Aut;
      rec.round_trip_ok = true;
    } else {
      rec.group_case = GroupCase::Unclassified;
      rec.notes = "G != G(N,H) * Aut(V): expected order " + to_decimal(expected.order());
    }
  } else {
    PermGroup symf = sym_f_group(sp, part, f, seed);
    PermGroup expected = join(gnh, symf, gl, seed);
    if (equal_groups(g, expected)) {
      rec.group_case = GroupCase::Fix0Symf;
      rec.round_trip_ok = true;
    } else {
      rec.group_case = GroupCase::Unclassified;
      rec.notes = "G != G(N,H) * Sym^f * Aut(V): expected order " + to_decimal(expected.order());
    }
  }
  return rec;
}

namespace {

bool same_params(const ClassificationRecord& rec, const std::vector<Scalar>& gamma,
                 const std::vector<std::vector<Scalar>>& n,
                 const std::vector<std::vector<Scalar>>& h, GroupCase expected) {
  return rec.group_case == expected && rec.gamma == gamma && rec.N == n && rec.H == h;
}

std::string describe(const ClassificationRecord& rec) {
  std::string s = to_string(rec.group_case) + " order " + rec.order;
  if (!rec.gamma.empty()) {
    s += " gamma={";
    for (size_t i = 0; i < rec.gamma.size(); ++i)
      s += (i ? "," : "") + std::to_string(rec.gamma[i]);
    s += "}";
  }
  return s;
}

} // namespace

CatalogResult build_catalog(const Space& sp, uint64_t seed, uint32_t max_points) {
  if (sp.size() > max_points)
    errors::bounds("catalog bound is p^n <= " + std::to_string(max_points));

  CatalogResult cat;
  cat.p = sp.p();
  cat.n = sp.n();

  struct Pending {
    CatalogConstruction c;
    PermGroup group;
  };
  std::vector<Pending> pending;

  pending.push_back({{"SYM", {}, {}, {}, 0, false, false, ""}, sym_group(sp.size(), seed)});
  pending.push_back({{"AGL", {}, {}, {}, 0, false, false, ""}, agl_group(sp, seed)});

  PermGroup gl = gl_group(sp, seed);
  for (const GammaSubgroup& gamma : gamma_subgroups(sp.p())) {
    ClassPartition part = sim_classes(sp, gamma);
    Labelling f = make_labelling(sp, part);
    PermGroup symf = sym_f_group(sp, part, f, seed);
    for (const auto& [n, h] : normal_pairs(gamma)) {
      PermGroup gnh = build_g_nh(sp, part, f, n, h, seed);
      CatalogConstruction base{"", gamma.elements(), n.value_lists(), h.value_lists(),
                               0,  false,            false,           ""};
      {
        CatalogConstruction c = base;
        c.kind = "NH_AUT";
        pending.push_back({std::move(c), join(gnh, gl, seed)});
      }
      {
        CatalogConstruction c = base;
        c.kind = "NH_SYMF";
        pending.push_back({std::move(c), join(gnh, symf, gl, seed)});
      }
    }
  }

  // deduplicate by exact group equality (order fast path inside equal_groups)
  std::vector<PermGroup> distinct;
  std::vector<size_t> owner(pending.size());
  for (size_t i = 0; i < pending.size(); ++i) {
    size_t found = distinct.size();
    for (size_t j = 0; j < distinct.size(); ++j)
      if (equal_groups(distinct[j], pending[i].group)) {
        found = j;
        break;
      }
    if (found == distinct.size()) distinct.push_back(pending[i].group);
    owner[i] = found;
  }

  // canonical group order: by (order, fingerprint)
  std::vector<size_t> perm(distinct.size());
  for (size_t i = 0; i < perm.size(); ++i) perm[i] = i;
  std::vector<GroupFingerprint> fps;
  fps.reserve(distinct.size());
  for (const auto& g : distinct) fps.push_back(fingerprint(g));
  std::sort(perm.begin(), perm.end(), [&](size_t a, size_t b) { return fps[a] < fps[b]; });
  std::vector<size_t> where(distinct.size());
  for (size_t i = 0; i < perm.size(); ++i) where[perm[i]] = i;

  cat.groups.reserve(distinct.size());
  for (size_t i = 0; i < perm.size(); ++i) {
    CatalogGroup cg{distinct[perm[i]], classify(sp, distinct[perm[i]], seed)};
    cat.groups.push_back(std::move(cg));
  }

  for (size_t i = 0; i < pending.size(); ++i) {
    CatalogConstruction c = std::move(pending[i].c);
    c.group_index = where[owner[i]];
    const ClassificationRecord& rec = cat.groups[c.group_index].record;
    bool matches = false;
    if (c.kind == "SYM")
      matches = rec.group_case == GroupCase::Sym;
    else if (c.kind == "AGL")
      matches = rec.group_case == GroupCase::Agl;
    else if (c.kind == "NH_AUT")
      matches = same_params(rec, c.gamma, c.N, c.H, GroupCase::Fix0Aut);
    else
      matches = same_params(rec, c.gamma, c.N, c.H, GroupCase::Fix0Symf);
    c.collapsed = !matches;
    c.round_trip_ok = matches && rec.round_trip_ok;
    if (c.collapsed)
      c.absorbed_into = "group " + std::to_string(c.group_index) + ": " + describe(rec);
    cat.constructions.push_back(std::move(c));
  }
  return cat;
}

std::string to_string(AkShape s) {
  switch (s) {
    case AkShape::Empty: return "EMPTY";
    case AkShape::SubspaceImage: return "SUBSPACE_IMAGE";
    case AkShape::Full: return "FULL";
  }
  return "EMPTY";
}

namespace {

struct TupleSearch {
  const Space& sp;
  const PermGroup& g;
  uint64_t budget;

  uint64_t pack(const std::vector<uint32_t>& t) const {
    uint64_t k = 0;
    for (uint32_t x : t) k = (k << 8) | x;
    return k;
  }

  // BFS over the orbit of the tuple; returns the witness word (generator
  // indices) reaching the first tuple of rank <= k, or nullopt
  std::optional<std::vector<uint32_t>> find_low_rank(const std::vector<uint32_t>& start,
                                                     uint32_t k, bool want_witness) const {
    if (tuple_rank(sp, start) <= k) return std::vector<uint32_t>{};
    std::unordered_set<uint64_t> seen;
    std::vector<std::vector<uint32_t>> nodes = {start};
    std::vector<std::pair<int64_t, uint32_t>> parent = {{-1, 0}};
    seen.insert(pack(start));
    const auto& gens = g.generators();
    for (size_t q = 0; q < nodes.size(); ++q)
      for (uint32_t si = 0; si < gens.size(); ++si) {
        std::vector<uint32_t> img(nodes[q].size());
        for (size_t i = 0; i < img.size(); ++i) img[i] = gens[si].of(nodes[q][i]);
        if (!seen.insert(pack(img)).second) continue;
        if (seen.size() > budget) errors::budget("tuple orbit exceeds the memory budget");
        if (tuple_rank(sp, img) <= k) {
          std::vector<uint32_t> word;
          if (want_witness) {
            word.push_back(si);
            for (int64_t at = int64_t(q); at >= 0; at = parent[size_t(at)].first)
              if (parent[size_t(at)].first >= 0) word.push_back(parent[size_t(at)].second);
            std::reverse(word.begin(), word.end());
          }
          return word;
        }
        nodes.push_back(std::move(img));
        parent.emplace_back(int64_t(q), si);
      }
    return std::nullopt;
  }
};

} // namespace

AkResult a_k_set(const Space& sp, const PermGroup& g, const std::vector<VecIndex>& s, uint32_t k,
                 uint64_t budget, uint64_t seed) {
  if (k < 1) errors::precondition("BadK", "k must be >= 1");
  if (s.empty()) errors::precondition("EmptySet", "S must be nonempty");
  std::vector<VecIndex> sv = s;
  std::sort(sv.begin(), sv.end());
  sv.erase(std::unique(sv.begin(), sv.end()), sv.end());
  for (VecIndex v : sv)
    if (v == 0 || v >= sp.size())
      errors::precondition("PreconditionViolated", "S must consist of nonzero vectors");
  if (sv.size() + 1 > 8) errors::budget("|S| too large for packed tuple orbits");
  if (g.degree() != sp.size())
    errors::precondition("DegreeMismatch", "group degree does not match the space");

  AkResult res;
  res.s = sv;
  res.k = k;

  TupleSearch search{sp, g, budget};
  auto base_witness = search.find_low_rank(sv, k, true);
  if (base_witness.has_value()) {
    for (VecIndex v = 0; v < sp.size(); ++v) {
      std::vector<uint32_t> t = sv;
      t.push_back(v);
      if (search.find_low_rank(t, k, false).has_value()) res.set.push_back(v);
    }
  }

  if (res.set.empty()) {
    res.shape = AkShape::Empty;
  } else if (res.set.size() == sp.size()) {
    res.shape = AkShape::Full;
  } else {
    res.shape = AkShape::SubspaceImage;
    uint64_t expect = 1;
    for (uint32_t i = 0; i < k; ++i) expect *= sp.p();
    if (res.set.size() != expect)
      errors::internal("A_k(S) has " + std::to_string(res.set.size()) +
                       " elements; the trichotomy requires p^k = " + std::to_string(expect));
    // reconstruct the witness element from the generator word
    Perm g0 = Perm::identity(sp.size());
    for (uint32_t si : *base_witness) g0 = g0.then(g.generators()[si]);
    std::vector<VecIndex> image;
    for (VecIndex v : res.set) image.push_back(g0.of(v));
    std::sort(image.begin(), image.end());
    Subspace w = span_of(sp, image);
    if (w.members != image || w.dim != k)
      errors::internal("A_k(S) image under the witness is not a k-dimensional subspace");
    res.witness = g0.inverse();
    res.witness_subspace = image;
  }

  // kandn consistency, reported only (needs Gamma; skip when unavailable)
  try {
    PermGroup zero_stab = fixes_point(g, 0) ? g : pointwise_stabilizer(g, {0}, seed);
    GammaSubgroup gamma = compute_gamma(sp, zero_stab);
    ClassPartition part = sim_classes(sp, gamma);
    std::set<int32_t> classes;
    for (VecIndex v : res.s) classes.insert(part.class_of[v]);
    uint64_t pk = 1;
    for (uint32_t i = 0; i < k; ++i) pk *= sp.p();
    uint32_t bound = uint32_t((pk - 1) / gamma.size() - 1);
    res.s_class_count = uint32_t(classes.size());
    res.kandn_bound = bound;
    res.kandn_consistent =
        res.shape != AkShape::SubspaceImage || *res.s_class_count == bound;
  } catch (const Error&) {
    // group without a meaningful Gamma (e.g. not containing Aut(V))
  }
  return res;
}

std::vector<VecIndex> acl_pair(const Space& sp, const PermGroup& g, VecIndex v, VecIndex w,
                               uint64_t seed) {
  if (v == w) errors::precondition("PreconditionViolated", "acl needs two distinct vectors");
  if (v >= sp.size() || w >= sp.size()) errors::bounds("vector index out of range");
  Subspace span = span_of(sp, {v, w});
  if (span.members.size() == sp.size())
    errors::precondition("DegenerateSpan", "<v,w> = V makes the finite-orbit criterion vacuous");

  PermGroup stab = pointwise_stabilizer(g, {v, w}, seed);
  std::vector<VecIndex> out;
  for (VecIndex u = 0; u < sp.size(); ++u) {
    std::vector<bool> seen(sp.size(), false);
    std::vector<VecIndex> orb = {u};
    seen[u] = true;
    bool inside = span.contains(u);
    for (size_t q = 0; q < orb.size() && inside; ++q)
      for (const Perm& s : stab.generators()) {
        VecIndex img = s.of(orb[q]);
        if (!seen[img]) {
          if (!span.contains(img)) {
            inside = false;
            break;
          }
          seen[img] = true;
          orb.push_back(img);
        }
      }
    if (inside) out.push_back(u);
  }
  return out;
}

} // namespace reduct
