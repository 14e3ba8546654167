#include "reduct/field_space.hpp"

#include "reduct/errors.hpp"

#include <algorithm>
#include <set>

namespace reduct {

bool is_prime(uint32_t m) {
  if (m < 2) return false;
  for (uint32_t d = 2; d * d <= m; ++d)
    if (m % d == 0) return false;
  return true;
}

Scalar primitive_root(uint32_t p) {
  for (Scalar r = 2; r < p; ++r) {
    uint32_t x = r, ord = 1;
    while (x != 1) {
      x = (x * r) % p;
      ++ord;
    }
    if (ord == p - 1) return r;
  }
  errors::internal("no primitive root found (p not prime?)");
}

Space::Space(uint32_t p, uint32_t n, uint32_t max_points) : p_(p), n_(n) {
  if (p < 3 || p > kMaxPrime || !is_prime(p) || p % 2 == 0)
    errors::bounds("p must be an odd prime in [3, " + std::to_string(kMaxPrime) +
                   "], got " + std::to_string(p));
  if (n < 1) errors::bounds("n must be >= 1");
  pow_.resize(n + 1);
  pow_[0] = 1;
  for (uint32_t i = 1; i <= n; ++i) {
    uint64_t next = uint64_t(pow_[i - 1]) * p;
    if (next > max_points)
      errors::bounds("p^n = " + std::to_string(next) + " exceeds the configured bound of " +
                     std::to_string(max_points) + " points");
    pow_[i] = uint32_t(next);
  }
  size_ = pow_[n];
}

VecIndex Space::encode(const std::vector<Scalar>& coords) const {
  if (coords.size() != n_) errors::bounds("coordinate tuple has wrong length");
  VecIndex v = 0;
  for (uint32_t i = 0; i < n_; ++i) {
    if (coords[i] >= p_) errors::bounds("coordinate out of range [0, p)");
    v += coords[i] * pow_[i];
  }
  return v;
}

std::vector<Scalar> Space::decode(VecIndex v) const {
  if (v >= size_) errors::bounds("vector index out of range [0, p^n)");
  std::vector<Scalar> coords(n_);
  for (uint32_t i = 0; i < n_; ++i) {
    coords[i] = v % p_;
    v /= p_;
  }
  return coords;
}

Scalar Space::coord(VecIndex v, uint32_t i) const { return (v / pow_[i]) % p_; }

VecIndex Space::add(VecIndex a, VecIndex b) const {
  VecIndex r = 0;
  for (uint32_t i = 0; i < n_; ++i) {
    r += ((a % p_ + b % p_) % p_) * pow_[i];
    a /= p_;
    b /= p_;
  }
  return r;
}

VecIndex Space::sub(VecIndex a, VecIndex b) const { return add(a, neg(b)); }

VecIndex Space::neg(VecIndex a) const {
  VecIndex r = 0;
  for (uint32_t i = 0; i < n_; ++i) {
    r += ((p_ - a % p_) % p_) * pow_[i];
    a /= p_;
  }
  return r;
}

VecIndex Space::scalar_mul(Scalar c, VecIndex a) const {
  c %= p_;
  VecIndex r = 0;
  for (uint32_t i = 0; i < n_; ++i) {
    r += ((a % p_) * c % p_) * pow_[i];
    a /= p_;
  }
  return r;
}

VecIndex Space::basis_vector(uint32_t i) const {
  if (i >= n_) errors::bounds("basis index out of range");
  return pow_[i];
}

Scalar Space::finv(Scalar a) const {
  a %= p_;
  if (a == 0) errors::precondition("DivisionByZero", "no inverse of 0 in F_p");
  for (Scalar b = 1; b < p_; ++b)
    if ((a * b) % p_ == 1) return b;
  errors::internal("inverse not found");
}

bool Space::collinear(VecIndex a, VecIndex b) const {
  if (a == b) return true;
  if (a == 0 || b == 0) return false;
  for (Scalar c = 2; c < p_; ++c)
    if (scalar_mul(c, a) == b) return true;
  return false;
}

namespace {

// Reduce v against an echelon basis; returns the remainder.
VecIndex reduce_against(const Space& sp, const std::vector<VecIndex>& basis,
                        const std::vector<uint32_t>& lead, VecIndex v) {
  for (size_t i = 0; i < basis.size(); ++i) {
    Scalar c = sp.coord(v, lead[i]);
    if (c != 0) v = sp.sub(v, sp.scalar_mul(c, basis[i]));
  }
  return v;
}

uint32_t leading_coord(const Space& sp, VecIndex v) {
  for (uint32_t i = 0; i < sp.n(); ++i)
    if (sp.coord(v, i) != 0) return i;
  errors::internal("leading coordinate of zero vector");
}

} // namespace

Subspace span_of(const Space& sp, const std::vector<VecIndex>& s) {
  std::vector<VecIndex> basis;
  std::vector<uint32_t> lead;
  for (VecIndex v : s) {
    if (v >= sp.size()) errors::bounds("vector index out of range");
    VecIndex r = reduce_against(sp, basis, lead, v);
    if (r == 0) continue;
    uint32_t l = leading_coord(sp, r);
    r = sp.scalar_mul(sp.finv(sp.coord(r, l)), r);  // normalize pivot to 1
    basis.push_back(r);
    lead.push_back(l);
  }
  // back-substitute to row-reduced echelon form, ordered by leading coordinate
  std::vector<size_t> idx(basis.size());
  for (size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  std::sort(idx.begin(), idx.end(), [&](size_t a, size_t b) { return lead[a] < lead[b]; });
  std::vector<VecIndex> eb;
  std::vector<uint32_t> el;
  for (size_t i : idx) {
    eb.push_back(basis[i]);
    el.push_back(lead[i]);
  }
  for (size_t i = 0; i < eb.size(); ++i)
    for (size_t j = 0; j < eb.size(); ++j) {
      if (i == j) continue;
      Scalar c = sp.coord(eb[i], el[j]);
      if (c != 0) eb[i] = sp.sub(eb[i], sp.scalar_mul(c, eb[j]));
    }

  Subspace out;
  out.basis = eb;
  out.dim = uint32_t(eb.size());
  out.mask.assign(sp.size(), false);
  // enumerate members as all linear combinations of the basis
  out.members.reserve(1u << eb.size());
  std::vector<VecIndex> acc = {0};
  for (VecIndex b : eb) {
    std::vector<VecIndex> next;
    next.reserve(acc.size() * sp.p());
    for (VecIndex m : acc)
      for (Scalar c = 0; c < sp.p(); ++c) next.push_back(sp.add(m, sp.scalar_mul(c, b)));
    acc = std::move(next);
  }
  std::sort(acc.begin(), acc.end());
  out.members = std::move(acc);
  for (VecIndex m : out.members) out.mask[m] = true;
  return out;
}

bool linearly_independent(const Space& sp, const std::vector<VecIndex>& tuple) {
  for (VecIndex v : tuple)
    if (v == 0) return false;
  return tuple_rank(sp, tuple) == tuple.size();
}

uint32_t tuple_rank(const Space& sp, const std::vector<VecIndex>& tuple) {
  std::vector<VecIndex> basis;
  std::vector<uint32_t> lead;
  for (VecIndex v : tuple) {
    VecIndex r = reduce_against(sp, basis, lead, v);
    if (r == 0) continue;
    uint32_t l = leading_coord(sp, r);
    basis.push_back(sp.scalar_mul(sp.finv(sp.coord(r, l)), r));
    lead.push_back(l);
  }
  return uint32_t(basis.size());
}

std::vector<VecIndex> affine_closure(const Space& sp, const std::vector<VecIndex>& s) {
  if (s.empty()) errors::precondition("EmptySet", "affine closure of the empty set");
  // Aff(S) = s0 + span{ s - s0 : s in S }
  VecIndex s0 = s[0];
  std::vector<VecIndex> diffs;
  for (VecIndex v : s) diffs.push_back(sp.sub(v, s0));
  Subspace w = span_of(sp, diffs);
  std::vector<VecIndex> out;
  out.reserve(w.members.size());
  for (VecIndex m : w.members) out.push_back(sp.add(s0, m));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<VecIndex> line_closure(const Space& sp, const std::vector<VecIndex>& s) {
  if (s.empty()) errors::precondition("EmptySet", "line closure of the empty set");
  std::set<VecIndex> cur(s.begin(), s.end());
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<VecIndex> snapshot(cur.begin(), cur.end());
    for (size_t i = 0; i < snapshot.size() && !grew; ++i)
      for (size_t j = i + 1; j < snapshot.size() && !grew; ++j)
        for (Scalar lam = 0; lam < sp.p(); ++lam) {
          VecIndex x = sp.add(sp.scalar_mul(lam, snapshot[i]),
                              sp.scalar_mul((sp.p() + 1 - lam) % sp.p(), snapshot[j]));
          if (cur.insert(x).second) grew = true;
        }
  }
  return {cur.begin(), cur.end()};
}

bool is_affine_subspace(const Space& sp, const std::vector<VecIndex>& members) {
  if (members.empty()) return false;
  VecIndex m0 = members[0];
  std::vector<VecIndex> shifted;
  for (VecIndex v : members) shifted.push_back(sp.sub(v, m0));
  Subspace w = span_of(sp, shifted);
  std::sort(shifted.begin(), shifted.end());
  return shifted == w.members;
}

} // namespace reduct
