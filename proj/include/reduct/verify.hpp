#ifndef REDUCT_VERIFY_HPP
#define REDUCT_VERIFY_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace reduct {

/// Result of one property suite; failures carry minimal counterexample dumps.
struct SuiteResult {
  std::string suite;
  bool passed = true;
  uint64_t checks = 0;
  std::vector<std::string> failures;

  void record(bool ok, const std::string& dump) {
    ++checks;
    if (!ok) {
      passed = false;
      if (failures.size() < 5) failures.push_back(dump);
    }
  }
};

/// sigma laws: composition (sigma_circ), conjugation (autgaut), relabelling
/// (labelsswap), class-constancy, and the label-preserving membership
/// criterion; iters random instances per law, spread over all Gamma <= F_p^x.
SuiteResult verify_sigma(uint32_t p, uint32_t n, uint64_t iters = 1000, uint64_t seed = 2024);

/// Line-preservation composition closure, FTPG <-> line preservation
/// (exhaustive over the induced linear actions for n >= 3), FTAG <->
/// affine-line preservation <-> AGL membership, and the n = 2 vacuity regime.
SuiteResult verify_geometry(uint32_t p, uint32_t n, uint64_t seed = 2024);

/// acl = Aff, |acl| = p, and the exchange property, for G = AGL over every
/// pair with proper span.
SuiteResult verify_acl(uint32_t p, uint32_t n, uint64_t seed = 2024);

/// A_k trichotomy + |A_k| = p^k in the subspace case + antitonicity.
SuiteResult verify_akset(uint32_t p, uint32_t n, uint64_t seed = 2024);

/// G(N,H) chain order equals (|H|/|N|) * |N|^c for every Gamma and N <| H.
SuiteResult verify_gnh_order(uint32_t p, uint32_t n, uint64_t seed = 2024);

/// Micro-oracle at (3,1) against the brute-forced subgroup lattice of S_3,
/// plus enumeration determinism.
SuiteResult verify_interval(uint64_t seed = 2024);

} // namespace reduct

#endif
