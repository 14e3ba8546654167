#ifndef REDUCT_BIGCOUNT_HPP
#define REDUCT_BIGCOUNT_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace reduct {

/// Exact group orders. |Sym(27)| ~ 1.09e28 already exceeds 64 bits.
using BigCount = boost::multiprecision::cpp_int;

inline std::string to_decimal(const BigCount& x) { return x.str(); }

inline BigCount big_factorial(uint64_t n) {
  BigCount r = 1;
  for (uint64_t i = 2; i <= n; ++i) r *= i;
  return r;
}

inline BigCount big_pow(uint64_t base, uint64_t exp) {
  BigCount r = 1;
  for (uint64_t i = 0; i < exp; ++i) r *= base;
  return r;
}

} // namespace reduct

#endif
