#include "reduct/perm.hpp"

#include "reduct/errors.hpp"

#include <sstream>

namespace reduct {

Perm::Perm(std::vector<uint32_t> images) : img_(std::move(images)) {
  std::vector<bool> seen(img_.size(), false);
  for (uint32_t x : img_) {
    if (x >= img_.size() || seen[x]) errors::precondition("NotBijective", "images are not a permutation");
    seen[x] = true;
  }
}

Perm Perm::identity(uint32_t degree) {
  std::vector<uint32_t> img(degree);
  for (uint32_t i = 0; i < degree; ++i) img[i] = i;
  return Perm(std::move(img));
}

Perm Perm::then(const Perm& g) const {
  if (degree() != g.degree()) errors::precondition("DegreeMismatch", "composing permutations of different degree");
  std::vector<uint32_t> img(img_.size());
  for (uint32_t i = 0; i < img_.size(); ++i) img[i] = g.img_[img_[i]];
  return Perm(std::move(img));
}

Perm Perm::inverse() const {
  std::vector<uint32_t> img(img_.size());
  for (uint32_t i = 0; i < img_.size(); ++i) img[img_[i]] = i;
  return Perm(std::move(img));
}

bool Perm::is_identity() const {
  for (uint32_t i = 0; i < img_.size(); ++i)
    if (img_[i] != i) return false;
  return true;
}

std::string Perm::to_line() const {
  std::ostringstream os;
  for (uint32_t i = 0; i < img_.size(); ++i) {
    if (i) os << ' ';
    os << img_[i];
  }
  return os.str();
}

Perm transposition(uint32_t degree, uint32_t a, uint32_t b) {
  std::vector<uint32_t> img(degree);
  for (uint32_t i = 0; i < degree; ++i) img[i] = i;
  img[a] = b;
  img[b] = a;
  return Perm(std::move(img));
}

Perm cycle(uint32_t degree, const std::vector<uint32_t>& points) {
  std::vector<uint32_t> img(degree);
  for (uint32_t i = 0; i < degree; ++i) img[i] = i;
  for (size_t i = 0; i + 1 < points.size(); ++i) img[points[i]] = points[i + 1];
  if (points.size() > 1) img[points.back()] = points.front();
  return Perm(std::move(img));
}

} // namespace reduct
