#ifndef ICL_BICYCLIC_HPP
#define ICL_BICYCLIC_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace icl::bicyclic {

// An element (a, b) of the bicyclic monoid on pairs of non-negative
// integers, with product (a,b)(c,d) = (a-b+t, d-c+t) for t = max(b, c).
struct Element {
  std::int64_t a = 0;
  std::int64_t b = 0;

  bool operator==(const Element& o) const { return a == o.a && b == o.b; }
  bool operator!=(const Element& o) const { return !(*this == o); }
};

Element mul(Element x, Element y);
inline Element operator*(Element x, Element y) { return mul(x, y); }
Element inv(Element x);

// A full inverse subsemigroup of the bicyclic monoid: either the
// idempotents alone, or T(k,d) = { (x,y) : x,y >= k, d | x-y }.
class Sub {
 public:
  // E(B); the bottom of the subsemigroup lattice.
  static Sub idempotents();
  static Sub tkd(std::int64_t k, std::int64_t d);

  bool is_idempotents() const { return idem_; }
  std::int64_t k() const { return k_; }
  std::int64_t d() const { return d_; }

  bool contains(Element x) const;

  // Membership in the corresponding full inverse subsemigroup, which
  // carries every idempotent of B on top of the T(k,d) elements.
  bool full_contains(Element x) const { return x.a == x.b || contains(x); }

  // Lattice order: the idempotent subsemigroup is the adjoined bottom,
  // above it containment T(k,d) <= T(j,c) iff j <= k and c | d.
  bool subset_of(const Sub& o) const;

  Sub meet(const Sub& o) const;
  Sub join(const Sub& o) const;

  bool operator==(const Sub& o) const {
    return idem_ == o.idem_ && (idem_ || (k_ == o.k_ && d_ == o.d_));
  }

  std::string to_string() const;

 private:
  bool idem_ = false;
  std::int64_t k_ = 0;
  std::int64_t d_ = 1;
};

enum class TailKind { kInfiniteClass, kPeriodic };

// A congruence on E(B), identified with a partition of the non-negative
// integers into intervals: finitely many initial classes of the given
// sizes, then either a single infinite class or classes repeating the
// periodic pattern of sizes.
//
// Construction canonicalizes: the pattern is reduced to its primitive
// root and absorbed prefix entries are stripped, so the stored prefix
// length and pattern are the minimal ones.
class Trace {
 public:
  static Trace infinite_class(std::vector<std::int64_t> prefix_sizes);
  static Trace periodic(std::vector<std::int64_t> prefix_sizes,
                        std::vector<std::int64_t> pattern);

  TailKind tail() const { return tail_; }
  const std::vector<std::int64_t>& prefix_sizes() const { return prefix_; }
  const std::vector<std::int64_t>& pattern() const { return pattern_; }

  // Sum of one pattern occurrence; the period of the congruence.
  std::int64_t period() const;

  // First point of the infinite class (infinite tail only).
  std::int64_t infinite_class_start() const;

  // First point of the fully periodic zone: prefix sum.
  std::int64_t periodic_start() const;

  bool related(std::int64_t x, std::int64_t y) const;

  // Largest point of the class containing x, or nullopt inside the
  // infinite class.
  std::optional<std::int64_t> class_max(std::int64_t x) const;

  // Least threshold l such that for all x, y >= l the pattern of
  // related pairs is invariant under shifting both points by the
  // period.  Periodic tail only; InputError otherwise.
  std::int64_t shift_threshold() const;

  // The normalizer of this congruence: T(n,1) when an infinite class
  // starts at n, T(l,d) in the periodic case.
  Sub normalizer() const;

  bool operator==(const Trace& o) const {
    return tail_ == o.tail_ && prefix_ == o.prefix_ && pattern_ == o.pattern_;
  }

  std::string to_string() const;

 private:
  Trace() = default;

  TailKind tail_ = TailKind::kPeriodic;
  std::vector<std::int64_t> prefix_;
  std::vector<std::int64_t> pattern_;  // empty iff infinite tail
};

// Whether (trace, sub) is the trace / inverse kernel pair of a left
// congruence on the bicyclic monoid: always for the idempotent
// subsemigroup; T(n,c) over an infinite class starting at n; and in the
// periodic case T(j,c) with the period dividing c and j either the
// shift threshold or the successor of a class maximum at or beyond the
// periodic zone.
bool is_valid_pair(const Trace& trace, const Sub& sub);

enum class Side { kLeft, kRight };

// Membership in the minimum one-sided congruence with the given trace:
// on the left, (a,b) ~ (c,d) iff b - a = d - c and b, d are related;
// on the right the first coordinates are compared instead.
bool min_congruence_related(const Trace& trace, Element x, Element y, Side side);

// Definitional normalizer membership test by conjugation, checking all
// related idempotent pairs with coordinates up to `bound`.
bool normalizes_by_conjugation(const Trace& trace, Element g, std::int64_t bound);

// Parsers for the CLI syntax "prefix=[m1,m2,...];tail=inf",
// "prefix=[...];tail=per([p1,...])" and "k=K,d=D" / "E".
Trace parse_trace(const std::string& text);
Sub parse_sub(const std::string& text);

}  // namespace icl::bicyclic

#endif
