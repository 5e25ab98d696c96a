#ifndef ICL_BITSET_HPP
#define ICL_BITSET_HPP

#include <cstddef>
#include <cstdint>
#include <vector>

namespace icl {

// Fixed-size dynamic bitset used for element subsets of a semigroup.
// Comparison is lexicographic on words, which gives a stable canonical
// order for deduplicated subset lists.
class Bitset {
 public:
  Bitset() = default;

  explicit Bitset(std::size_t n) : size_(n), words_((n + 63) / 64, 0) {}

  std::size_t size() const { return size_; }

  bool test(std::size_t i) const {
    return (words_[i >> 6] >> (i & 63)) & 1u;
  }

  void set(std::size_t i) { words_[i >> 6] |= std::uint64_t(1) << (i & 63); }

  void reset(std::size_t i) {
    words_[i >> 6] &= ~(std::uint64_t(1) << (i & 63));
  }

  void set_all() {
    for (std::size_t i = 0; i < size_; ++i)
      set(i);
  }

  std::size_t count() const {
    std::size_t c = 0;
    for (auto w : words_)
      c += static_cast<std::size_t>(__builtin_popcountll(w));
    return c;
  }

  bool subset_of(const Bitset& other) const {
    for (std::size_t k = 0; k < words_.size(); ++k)
      if (words_[k] & ~other.words_[k])
        return false;
    return true;
  }

  Bitset operator&(const Bitset& o) const {
    Bitset r(size_);
    for (std::size_t k = 0; k < words_.size(); ++k)
      r.words_[k] = words_[k] & o.words_[k];
    return r;
  }

  Bitset operator|(const Bitset& o) const {
    Bitset r(size_);
    for (std::size_t k = 0; k < words_.size(); ++k)
      r.words_[k] = words_[k] | o.words_[k];
    return r;
  }

  bool operator==(const Bitset& o) const {
    return size_ == o.size_ && words_ == o.words_;
  }

  bool operator!=(const Bitset& o) const { return !(*this == o); }

  bool operator<(const Bitset& o) const { return words_ < o.words_; }

  std::vector<int> members() const {
    std::vector<int> out;
    for (std::size_t i = 0; i < size_; ++i)
      if (test(i))
        out.push_back(static_cast<int>(i));
    return out;
  }

  std::size_t hash() const {
    std::size_t h = size_;
    for (auto w : words_)
      h ^= static_cast<std::size_t>(w) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    return h;
  }

 private:
  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace icl

#endif
