#ifndef REDUCT_GEN_IO_HPP
#define REDUCT_GEN_IO_HPP

#include "reduct/perm.hpp"

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace reduct {

/// Generator file format (bit-exact):
///   line 1: "p n"
///   each further nonempty line: p^n whitespace-separated decimal images
///   (0-based, index encoding of F_p^n); lines starting with '#' are comments.
struct GenFile {
  uint32_t p = 0;
  uint32_t n = 0;
  std::vector<Perm> gens;
};

GenFile read_generators(std::istream& in);
GenFile read_generators_file(const std::string& path);

std::string write_generators(const GenFile& gf);
/// The body lines of the format ("p n" header plus one line per generator).
std::vector<std::string> generator_lines(uint32_t p, uint32_t n, const std::vector<Perm>& gens);

} // namespace reduct

#endif
