#ifndef REDUCT_PERM_HPP
#define REDUCT_PERM_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace reduct {

/// Permutation of [0, degree). Composition is left-to-right throughout:
/// (i)^(fg) = ((i)^f)^g, matching exponent notation x^g.
class Perm {
public:
  Perm() = default;
  explicit Perm(std::vector<uint32_t> images);
  static Perm identity(uint32_t degree);

  uint32_t degree() const { return uint32_t(img_.size()); }
  uint32_t of(uint32_t x) const { return img_[x]; }
  uint32_t operator[](uint32_t x) const { return img_[x]; }
  const std::vector<uint32_t>& images() const { return img_; }

  /// Apply *this first, then g.
  Perm then(const Perm& g) const;
  Perm inverse() const;

  bool is_identity() const;
  bool fixes(uint32_t x) const { return img_[x] == x; }

  bool operator==(const Perm& o) const { return img_ == o.img_; }
  bool operator!=(const Perm& o) const { return img_ != o.img_; }
  bool operator<(const Perm& o) const { return img_ < o.img_; }

  std::string to_line() const;  // whitespace-separated images

private:
  std::vector<uint32_t> img_;
};

inline Perm compose(const Perm& f, const Perm& g) { return f.then(g); }

Perm transposition(uint32_t degree, uint32_t a, uint32_t b);

/// Cycle sending points[0] -> points[1] -> ... -> points.back() -> points[0].
Perm cycle(uint32_t degree, const std::vector<uint32_t>& points);

} // namespace reduct

#endif
