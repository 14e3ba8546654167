#include "reduct/gen_io.hpp"

#include "reduct/errors.hpp"
#include "reduct/field_space.hpp"

#include <fstream>
#include <sstream>

namespace reduct {

GenFile read_generators(std::istream& in) {
  GenFile gf;
  std::string line;
  bool header_done = false;
  uint64_t degree = 0;
  size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    size_t first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    if (line[first] == '#') continue;
    std::istringstream ls(line);
    if (!header_done) {
      if (!(ls >> gf.p >> gf.n)) errors::parse("line 1 must be 'p n'");
      std::string extra;
      if (ls >> extra) errors::parse("trailing tokens after 'p n' header");
      if (gf.p < 3 || !is_prime(gf.p) || gf.p % 2 == 0)
        errors::parse("p must be an odd prime, got " + std::to_string(gf.p));
      if (gf.n < 1) errors::parse("n must be >= 1");
      degree = 1;
      for (uint32_t i = 0; i < gf.n; ++i) {
        degree *= gf.p;
        if (degree > (1u << 20)) errors::parse("p^n too large for a generator file");
      }
      header_done = true;
      continue;
    }
    std::vector<uint32_t> img;
    img.reserve(degree);
    long long x;
    while (ls >> x) {
      if (x < 0 || uint64_t(x) >= degree)
        errors::parse("image out of range on line " + std::to_string(lineno));
      img.push_back(uint32_t(x));
    }
    if (!ls.eof()) errors::parse("non-numeric token on line " + std::to_string(lineno));
    if (img.size() != degree)
      errors::parse("line " + std::to_string(lineno) + " has " + std::to_string(img.size()) +
                    " images, expected " + std::to_string(degree));
    try {
      gf.gens.emplace_back(std::move(img));
    } catch (const Error&) {
      errors::parse("line " + std::to_string(lineno) + " is not a permutation");
    }
  }
  if (!header_done) errors::parse("empty generator file");
  if (gf.gens.empty()) errors::parse("generator file has no permutations");
  return gf;
}

GenFile read_generators_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) errors::parse("cannot open generator file: " + path);
  return read_generators(in);
}

std::vector<std::string> generator_lines(uint32_t p, uint32_t n, const std::vector<Perm>& gens) {
  std::vector<std::string> lines;
  lines.push_back(std::to_string(p) + " " + std::to_string(n));
  for (const Perm& g : gens) lines.push_back(g.to_line());
  return lines;
}

std::string write_generators(const GenFile& gf) {
  std::string out;
  for (const std::string& l : generator_lines(gf.p, gf.n, gf.gens)) {
    out += l;
    out += '\n';
  }
  return out;
}

} // namespace reduct
