#ifndef ICL_SEMIGROUP_HPP
#define ICL_SEMIGROUP_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "icl/bitset.hpp"
#include "icl/partial_perm.hpp"

namespace icl {

constexpr std::size_t kDefaultElementCap = 5000;

// A fully enumerated finite inverse semigroup: Cayley table, inverses,
// idempotents and the natural partial order.  Immutable once built and
// safe to share across threads.
//
// Built either from partial permutation generators (elements carry their
// PartialPerm in canonical order) or from a raw multiplication table
// (e.g. a quotient), in which case elements() is empty.
class FiniteInverseSemigroup {
 public:
  // Inverse subsemigroup of I_n generated by `generators` and their
  // inverses.  Throws InputError on an empty list or mixed degrees and
  // ResourceError when the closure exceeds `cap` elements.
  static FiniteInverseSemigroup closure(const std::vector<PartialPerm>& generators,
                                        std::size_t cap = kDefaultElementCap);

  // Builds from an m*m table (table[a][b] = index of ab).  Verifies the
  // inverse semigroup axioms; throws InputError if they fail.
  static FiniteInverseSemigroup from_table(const std::vector<std::vector<int>>& table);

  std::size_t size() const { return size_; }

  int product(int a, int b) const { return cayley_[static_cast<std::size_t>(a) * size_ + b]; }

  int inverse(int a) const { return inv_[a]; }

  bool is_idempotent(int a) const { return idem_pos_[a] >= 0; }

  // Sorted list of idempotent element indices; position in this list is
  // the "E-index" used by trace congruences.
  const std::vector<int>& idempotents() const { return idempotents_; }

  // E-index of idempotent element a, or -1.
  int idempotent_position(int a) const { return idem_pos_[a]; }

  std::size_t num_idempotents() const { return idempotents_.size(); }

  // Natural partial order: a <= b iff a = (a a^-1) b.
  bool natural_leq(int a, int b) const { return leq_[static_cast<std::size_t>(a) * size_ + b]; }

  // Green's R: a R b iff a a^-1 = b b^-1.
  bool green_r(int a, int b) const { return right_idem_[a] == right_idem_[b]; }

  // Index of a a^-1.
  int domain_idempotent(int a) const { return right_idem_[a]; }

  // Index of a^-1 a.
  int range_idempotent(int a) const { return inv_right_idem_[a]; }

  bool has_elements() const { return !elements_.empty(); }

  const std::vector<PartialPerm>& elements() const { return elements_; }

  const PartialPerm& element(int a) const { return elements_[a]; }

  // Index of a partial perm, or -1 when absent.
  int index_of(const PartialPerm& p) const;

  // Conjugate a^-1 e a (an idempotent whenever e is).
  int conj_down(int a, int e) const { return product(product(inverse(a), e), a); }

  // Conjugate a e a^-1.
  int conj_up(int a, int e) const { return product(product(a, e), inverse(a)); }

 private:
  FiniteInverseSemigroup() = default;

  void finish_tables();
  void verify_axioms() const;

  std::size_t size_ = 0;
  std::vector<int> cayley_;
  std::vector<int> inv_;
  std::vector<int> idempotents_;
  std::vector<int> idem_pos_;
  std::vector<int> right_idem_;      // a a^-1
  std::vector<int> inv_right_idem_;  // a^-1 a
  std::vector<bool> leq_;
  std::vector<PartialPerm> elements_;
};

// A full inverse subsemigroup, stored as a membership bitmask over the
// element indices of its ambient semigroup.
struct FullInverseSub {
  Bitset member;

  bool contains(int a) const { return member.test(static_cast<std::size_t>(a)); }
  std::size_t count() const { return member.count(); }
  std::vector<int> members() const { return member.members(); }

  bool operator==(const FullInverseSub& o) const { return member == o.member; }
  bool operator<(const FullInverseSub& o) const { return member < o.member; }
};

// Smallest subset containing `seed` that is closed under product and
// inverse (the ambient idempotents are not added automatically).
Bitset inverse_subsemigroup_closure(const FiniteInverseSemigroup& S, const Bitset& seed);

// Full inverse subsemigroup generated by E(S) together with `extra`.
FullInverseSub full_inverse_closure(const FiniteInverseSemigroup& S, const Bitset& extra);

// True iff `sub` contains E(S) and is closed under product and inverse.
bool is_full_inverse_sub(const FiniteInverseSemigroup& S, const Bitset& sub);

// True iff `sub` is closed under product and inverse (not necessarily full).
bool is_inverse_sub(const FiniteInverseSemigroup& S, const Bitset& sub);

FullInverseSub idempotent_sub(const FiniteInverseSemigroup& S);
FullInverseSub whole_sub(const FiniteInverseSemigroup& S);

// All full inverse subsemigroups, deduplicated and sorted by membership
// bitmask.  E(S) and S itself always appear.
std::vector<FullInverseSub> full_inverse_subsemigroups(const FiniteInverseSemigroup& S);

// The semilattice E(S) as a semigroup of its own.  Element i of the
// result is the idempotent with E-index i in S.
FiniteInverseSemigroup idempotent_semilattice(const FiniteInverseSemigroup& S);

}  // namespace icl

#endif
