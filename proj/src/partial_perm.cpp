#include "icl/partial_perm.hpp"

#include <algorithm>

#include "icl/errors.hpp"

namespace icl {

PartialPerm PartialPerm::identity(std::size_t degree) {
  std::vector<int> img(degree);
  for (std::size_t i = 0; i < degree; ++i)
    img[i] = static_cast<int>(i);
  return PartialPerm(std::move(img));
}

PartialPerm PartialPerm::empty(std::size_t degree) {
  return PartialPerm(std::vector<int>(degree, kUndef));
}

PartialPerm::PartialPerm(std::vector<int> image) : img_(std::move(image)) {
  std::vector<bool> seen(img_.size(), false);
  for (int v : img_) {
    if (v == kUndef)
      continue;
    if (v < 0 || v >= static_cast<int>(img_.size()))
      throw InputError("partial perm image out of range");
    if (seen[v])
      throw InputError("partial perm image not injective");
    seen[v] = true;
  }
}

std::size_t PartialPerm::rank() const {
  std::size_t r = 0;
  for (int v : img_)
    if (v != kUndef)
      ++r;
  return r;
}

std::vector<int> PartialPerm::domain() const {
  std::vector<int> d;
  for (std::size_t i = 0; i < img_.size(); ++i)
    if (img_[i] != kUndef)
      d.push_back(static_cast<int>(i));
  return d;
}

std::vector<int> PartialPerm::image_points() const {
  std::vector<int> im;
  for (int v : img_)
    if (v != kUndef)
      im.push_back(v);
  std::sort(im.begin(), im.end());
  return im;
}

bool PartialPerm::is_identity() const {
  for (std::size_t i = 0; i < img_.size(); ++i)
    if (img_[i] != static_cast<int>(i))
      return false;
  return true;
}

bool PartialPerm::is_idempotent() const {
  // Idempotent partial perms are exactly the partial identities.
  for (std::size_t i = 0; i < img_.size(); ++i)
    if (img_[i] != kUndef && img_[i] != static_cast<int>(i))
      return false;
  return true;
}

PartialPerm PartialPerm::operator*(const PartialPerm& q) const {
  if (degree() != q.degree())
    throw InputError("degree mismatch in composition");
  std::vector<int> img(degree(), kUndef);
  for (std::size_t i = 0; i < degree(); ++i)
    if (img_[i] != kUndef)
      img[i] = q.img_[img_[i]];
  PartialPerm r;
  r.img_ = std::move(img);
  return r;
}

PartialPerm PartialPerm::inverse() const {
  std::vector<int> img(degree(), kUndef);
  for (std::size_t i = 0; i < degree(); ++i)
    if (img_[i] != kUndef)
      img[img_[i]] = static_cast<int>(i);
  PartialPerm r;
  r.img_ = std::move(img);
  return r;
}

bool PartialPerm::operator<(const PartialPerm& o) const {
  std::size_t ra = rank(), rb = o.rank();
  if (ra != rb)
    return ra > rb;
  return img_ < o.img_;
}

std::string PartialPerm::to_string() const {
  std::string s = "[";
  for (std::size_t i = 0; i < img_.size(); ++i) {
    if (i)
      s += ',';
    if (img_[i] == kUndef)
      s += '-';
    else
      s += std::to_string(img_[i] + 1);
  }
  s += ']';
  return s;
}

std::ostream& operator<<(std::ostream& os, const PartialPerm& p) {
  return os << p.to_string();
}

}  // namespace icl
