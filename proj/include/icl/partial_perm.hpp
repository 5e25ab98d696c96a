#ifndef ICL_PARTIAL_PERM_HPP
#define ICL_PARTIAL_PERM_HPP

#include <cstddef>
#include <functional>
#include <ostream>
#include <string>
#include <vector>

namespace icl {

// An injective partial map on {0, ..., degree-1}.  Slot i of the image
// array holds the image of point i, or kUndef.  User-facing I/O is
// 1-based; everything here is 0-based.
class PartialPerm {
 public:
  static constexpr int kUndef = -1;

  PartialPerm() = default;

  // Identity on all points.
  static PartialPerm identity(std::size_t degree);

  // Empty map of the given degree.
  static PartialPerm empty(std::size_t degree);

  // Validates injectivity and range; throws InputError otherwise.
  explicit PartialPerm(std::vector<int> image);

  std::size_t degree() const { return img_.size(); }

  int operator[](std::size_t i) const { return img_[i]; }

  bool defined(std::size_t i) const { return img_[i] != kUndef; }

  std::size_t rank() const;

  std::vector<int> domain() const;
  std::vector<int> image_points() const;

  const std::vector<int>& image_array() const { return img_; }

  bool is_identity() const;
  bool is_idempotent() const;

  // Left-to-right composition: (p * q)(i) = q(p(i)).
  PartialPerm operator*(const PartialPerm& q) const;

  PartialPerm inverse() const;
  PartialPerm operator~() const { return inverse(); }

  bool operator==(const PartialPerm& o) const { return img_ == o.img_; }
  bool operator!=(const PartialPerm& o) const { return img_ != o.img_; }

  // Canonical order: rank descending, then lexicographic on the image
  // array.  Gives deterministic element indices after enumeration.
  bool operator<(const PartialPerm& o) const;

  // Rendering such as "[2,-]" (1-based images, '-' for undefined).
  std::string to_string() const;

 private:
  std::vector<int> img_;
};

std::ostream& operator<<(std::ostream& os, const PartialPerm& p);

}  // namespace icl

namespace std {
template <>
struct hash<icl::PartialPerm> {
  size_t operator()(const icl::PartialPerm& p) const {
    size_t h = p.degree();
    for (size_t i = 0; i < p.degree(); ++i)
      h ^= static_cast<size_t>(p[i] + 2) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    return h;
  }
};
}  // namespace std

#endif
