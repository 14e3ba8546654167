#include "reduct/gamma_sigma.hpp"

#include "reduct/errors.hpp"

#include <algorithm>
#include <set>
#include <unordered_set>

namespace reduct {

GammaSubgroup::GammaSubgroup(uint32_t p, std::vector<Scalar> elements)
    : p_(p), elems_(std::move(elements)) {
  std::sort(elems_.begin(), elems_.end());
  elems_.erase(std::unique(elems_.begin(), elems_.end()), elems_.end());
  if (elems_.empty() || elems_[0] == 0 || elems_.back() >= p)
    errors::precondition("BadGamma", "elements must lie in [1, p)");
  if (!std::binary_search(elems_.begin(), elems_.end(), 1u))
    errors::precondition("BadGamma", "subgroup must contain 1");
  pos_.assign(p, -1);
  for (size_t i = 0; i < elems_.size(); ++i) pos_[elems_[i]] = int32_t(i);
  for (Scalar a : elems_)
    for (Scalar b : elems_)
      if (pos_[(a * b) % p] < 0)
        errors::precondition("BadGamma", "set not closed under multiplication mod p");
  if ((p - 1) % elems_.size() != 0)
    errors::precondition("BadGamma", "subgroup order must divide p-1");
}

uint32_t GammaSubgroup::pos(Scalar c) const {
  int32_t i = pos_[c % p_];
  if (i < 0) errors::precondition("BadGamma", "scalar not in subgroup");
  return uint32_t(i);
}

Scalar GammaSubgroup::inv(Scalar a) const {
  for (Scalar b : elems_)
    if ((a * b) % p_ == 1) return b;
  errors::precondition("BadGamma", "scalar not invertible in subgroup");
}

std::vector<GammaSubgroup> gamma_subgroups(uint32_t p) {
  if (p < 3 || !is_prime(p) || p % 2 == 0) errors::bounds("p must be an odd prime");
  Scalar root = primitive_root(p);
  std::vector<GammaSubgroup> out;
  for (uint32_t d = 1; d <= p - 1; ++d) {
    if ((p - 1) % d != 0) continue;
    // the unique subgroup of order d is generated by root^((p-1)/d)
    Scalar gen = 1;
    for (uint32_t k = 0; k < (p - 1) / d; ++k) gen = (gen * root) % p;
    std::vector<Scalar> elems = {1};
    Scalar x = gen;
    while (x != 1) {
      elems.push_back(x);
      x = (x * gen) % p;
    }
    out.emplace_back(p, std::move(elems));
  }
  std::sort(out.begin(), out.end(),
            [](const GammaSubgroup& a, const GammaSubgroup& b) { return a.size() < b.size(); });
  return out;
}

SigmaPerm SigmaPerm::identity(uint32_t size) {
  SigmaPerm s;
  s.img.resize(size);
  for (uint32_t i = 0; i < size; ++i) s.img[i] = i;
  return s;
}

SigmaPerm SigmaPerm::then(const SigmaPerm& o) const {
  SigmaPerm out;
  out.img.resize(img.size());
  for (size_t i = 0; i < img.size(); ++i) out.img[i] = o.img[img[i]];
  return out;
}

SigmaPerm SigmaPerm::inverse() const {
  SigmaPerm out;
  out.img.resize(img.size());
  for (size_t i = 0; i < img.size(); ++i) out.img[img[i]] = uint32_t(i);
  return out;
}

bool SigmaPerm::is_identity() const {
  for (size_t i = 0; i < img.size(); ++i)
    if (img[i] != i) return false;
  return true;
}

SigmaPerm mult_perm(const GammaSubgroup& gamma, Scalar lambda) {
  SigmaPerm s;
  s.img.resize(gamma.size());
  for (uint32_t i = 0; i < gamma.size(); ++i) s.img[i] = gamma.pos(gamma.mul(lambda, gamma.at(i)));
  return s;
}

std::vector<Scalar> sigma_values(const GammaSubgroup& gamma, const SigmaPerm& s) {
  std::vector<Scalar> vals(s.img.size());
  for (size_t i = 0; i < s.img.size(); ++i) vals[i] = gamma.at(s.img[i]);
  return vals;
}

std::vector<std::vector<uint32_t>> ClassPartition::blocks_with_zero() const {
  std::vector<std::vector<uint32_t>> blocks = {{0}};
  blocks.insert(blocks.end(), classes.begin(), classes.end());
  return blocks;
}

ClassPartition sim_classes(const Space& sp, const GammaSubgroup& gamma) {
  if (gamma.p() != sp.p()) errors::precondition("BadGamma", "gamma is over a different prime");
  ClassPartition part{sp.p(), sp.n(), gamma, {}, std::vector<int32_t>(sp.size(), -1)};
  for (VecIndex v = 1; v < sp.size(); ++v) {
    if (part.class_of[v] >= 0) continue;
    std::vector<VecIndex> cls;
    for (Scalar lam : gamma.elements()) cls.push_back(sp.scalar_mul(lam, v));
    std::sort(cls.begin(), cls.end());
    for (VecIndex m : cls) part.class_of[m] = int32_t(part.classes.size());
    part.classes.push_back(std::move(cls));
  }
  return part;
}

Labelling make_labelling(const Space& sp, const ClassPartition& part) {
  Labelling f{part.gamma, std::vector<Scalar>(sp.size(), 0)};
  for (const auto& cls : part.classes) {
    VecIndex rep = cls[0];  // least index
    for (Scalar lam : part.gamma.elements()) f.label[sp.scalar_mul(lam, rep)] = lam;
  }
  return f;
}

namespace {

// v ~_G w iff every pair in orbit(G, (v, w)) spans a common line
bool pair_orbit_collinear(const Space& sp, const PermGroup& g, VecIndex v, VecIndex w) {
  auto key = [&](VecIndex a, VecIndex b) { return uint64_t(a) * sp.size() + b; };
  std::unordered_set<uint64_t> seen;
  std::vector<std::pair<VecIndex, VecIndex>> queue = {{v, w}};
  seen.insert(key(v, w));
  for (size_t k = 0; k < queue.size(); ++k) {
    auto [a, b] = queue[k];
    if (!sp.collinear(a, b)) return false;
    for (const Perm& s : g.generators()) {
      VecIndex a2 = s.of(a), b2 = s.of(b);
      if (seen.insert(key(a2, b2)).second) queue.emplace_back(a2, b2);
    }
  }
  return true;
}

} // namespace

GammaSubgroup compute_gamma(const Space& sp, const PermGroup& g) {
  if (g.degree() != sp.size())
    errors::precondition("DegreeMismatch", "group degree does not match the space");
  if (!fixes_point(g, 0))
    errors::precondition("PreconditionViolated", "group does not fix the zero vector");

  // sample vectors for the independence check ("M_v does not depend on v")
  std::vector<VecIndex> samples;
  if (sp.n() >= 2)
    samples = {sp.basis_vector(0), sp.basis_vector(1),
               sp.add(sp.basis_vector(0), sp.basis_vector(1))};
  else {
    for (VecIndex v = 1; v < sp.size() && samples.size() < 3; ++v) samples.push_back(v);
  }

  std::vector<Scalar> m0;
  for (size_t si = 0; si < samples.size(); ++si) {
    std::vector<Scalar> m = {1};
    for (Scalar lam = 2; lam < sp.p(); ++lam)
      if (pair_orbit_collinear(sp, g, samples[si], sp.scalar_mul(lam, samples[si])))
        m.push_back(lam);
    if (si == 0)
      m0 = m;
    else if (m != m0)
      errors::precondition("IndependenceViolation",
                           "M_v differs across sample vectors; does G contain Aut(V)?");
  }

  try {
    return GammaSubgroup(sp.p(), m0);
  } catch (const Error&) {
    errors::internal("computed M_v is not a subgroup of F_p^x; does G contain Aut(V)?");
  }
}

SigmaPerm sigma_of(const Space& sp, const ClassPartition& part, const Labelling& f, const Perm& g,
                   VecIndex v) {
  if (v == 0 || v >= sp.size())
    errors::precondition("PreconditionViolated", "sigma needs a nonzero vector");
  const auto& cls = part.classes[size_t(part.class_of[v])];
  int32_t target = part.class_of[g.of(cls[0])];
  for (VecIndex m : cls)
    if (part.class_of[g.of(m)] != target)
      errors::precondition("NotClassCompatible",
                           "permutation does not map the class of v onto a class");

  const GammaSubgroup& gamma = part.gamma;
  VecIndex unit = sp.scalar_mul(gamma.inv(f(v)), v);  // the label-1 member
  SigmaPerm s;
  s.img.resize(gamma.size());
  std::vector<bool> hit(gamma.size(), false);
  for (uint32_t i = 0; i < gamma.size(); ++i) {
    Scalar lam = gamma.at(i);
    Scalar out = f(g.of(sp.scalar_mul(lam, unit)));
    s.img[i] = gamma.pos(out);
    hit[s.img[i]] = true;
  }
  for (bool h : hit)
    if (!h) errors::internal("sigma is not a bijection of Gamma");
  return s;
}

Perm lift_on_class(const Space& sp, const ClassPartition& part, const Labelling& f, size_t cls,
                   const SigmaPerm& s) {
  const GammaSubgroup& gamma = part.gamma;
  const auto& members = part.classes.at(cls);
  std::vector<VecIndex> by_label(gamma.size());
  for (VecIndex m : members) by_label[gamma.pos(f(m))] = m;
  std::vector<uint32_t> img(sp.size());
  for (VecIndex v = 0; v < sp.size(); ++v) img[v] = v;
  for (VecIndex m : members) img[m] = by_label[s.img[gamma.pos(f(m))]];
  return Perm(std::move(img));
}

Perm global_label_action(const Space& sp, const ClassPartition& part, const Labelling& f,
                         const SigmaPerm& s) {
  const GammaSubgroup& gamma = part.gamma;
  std::vector<uint32_t> img(sp.size());
  img[0] = 0;
  for (const auto& members : part.classes) {
    std::vector<VecIndex> by_label(gamma.size());
    for (VecIndex m : members) by_label[gamma.pos(f(m))] = m;
    for (VecIndex m : members) img[m] = by_label[s.img[gamma.pos(f(m))]];
  }
  return Perm(std::move(img));
}

Perm label_preserving_lift(const Space& sp, const ClassPartition& part, const Labelling& f,
                           const std::vector<uint32_t>& pi) {
  const GammaSubgroup& gamma = part.gamma;
  std::vector<uint32_t> img(sp.size());
  img[0] = 0;
  for (size_t c = 0; c < part.classes.size(); ++c) {
    const auto& target = part.classes[pi[c]];
    std::vector<VecIndex> by_label(gamma.size());
    for (VecIndex m : target) by_label[gamma.pos(f(m))] = m;
    for (VecIndex m : part.classes[c]) img[m] = by_label[gamma.pos(f(m))];
  }
  return Perm(std::move(img));
}

PermGroup sym_f_group(const Space& sp, const ClassPartition& part, const Labelling& f,
                      uint64_t seed) {
  size_t c = part.classes.size();
  if (c < 2) return PermGroup::trivial_group(sp.size());
  std::vector<uint32_t> swap01(c), rot(c);
  for (size_t i = 0; i < c; ++i) swap01[i] = uint32_t(i);
  swap01[0] = 1;
  swap01[1] = 0;
  for (size_t i = 0; i < c; ++i) rot[i] = uint32_t((i + 1) % c);
  std::vector<Perm> gens = {label_preserving_lift(sp, part, f, swap01)};
  if (c > 2) gens.push_back(label_preserving_lift(sp, part, f, rot));
  PermGroup g = PermGroup::generate(std::move(gens), seed);
  if (g.order() != big_factorial(c))
    errors::internal("sym_f order mismatch: chain says " + to_decimal(g.order()));
  return g;
}

} // namespace reduct
