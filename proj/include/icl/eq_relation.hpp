#ifndef ICL_EQ_RELATION_HPP
#define ICL_EQ_RELATION_HPP

#include <cstddef>
#include <utility>
#include <vector>

#include "icl/semigroup.hpp"

namespace icl {

// Union-find backed equivalence relation on {0, ..., size-1}.  Mutable
// while being built, then frozen; the canonical form (class labels in
// order of first appearance) is a stable map key.
class EqRelation {
 public:
  EqRelation() = default;
  explicit EqRelation(std::size_t n);

  static EqRelation universal(std::size_t n);

  std::size_t size() const { return parent_.size(); }

  int find(int i) const;
  bool related(int a, int b) const { return find(a) == find(b); }

  // Merges the classes of a and b; returns true if they were distinct.
  // Throws InternalError when frozen.
  bool unite(int a, int b);

  void freeze();
  bool is_frozen() const { return frozen_; }

  std::size_t num_classes() const;

  // Blocks ordered by least element, members ascending.
  std::vector<std::vector<int>> blocks() const;

  std::vector<int> block_of(int a) const;

  // Canonical labelling: label[i] is the class id of i, ids assigned by
  // first appearance.  Equal relations have equal labellings.
  std::vector<int> canonical() const;

  // this is a subrelation of (refines) `other`.
  bool subrelation_of(const EqRelation& other) const;

  bool operator==(const EqRelation& o) const;
  bool operator!=(const EqRelation& o) const { return !(*this == o); }
  bool operator<(const EqRelation& o) const { return canonical() < o.canonical(); }

 private:
  mutable std::vector<int> parent_;
  std::vector<int> rank_;
  bool frozen_ = false;
};

// Intersection of two relations on the same ground set.
EqRelation eq_meet(const EqRelation& r1, const EqRelation& r2);

// Transitive closure of the union; this is the join both for equivalence
// relations and for left congruences.
EqRelation eq_join_transitive(const EqRelation& r1, const EqRelation& r2);

struct RestrictedRelation {
  EqRelation rel;            // relation on the subset, reindexed
  std::vector<int> indices;  // position -> original index
};

// rel restricted to `subset` (ascending original indices).
RestrictedRelation restrict_relation(const EqRelation& rel, const std::vector<int>& subset);

// A symmetric set of generating pairs for a left congruence.
class GenPairSet {
 public:
  GenPairSet() = default;

  void add(int a, int b) {
    pairs_.emplace_back(a, b);
    pairs_.emplace_back(b, a);
  }

  const std::vector<std::pair<int, int>>& pairs() const { return pairs_; }
  bool empty() const { return pairs_.empty(); }

 private:
  std::vector<std::pair<int, int>> pairs_;
};

// Least left congruence on S containing the given pairs, by worklist
// propagation: each merge (a,b) enqueues (ca, cb) for every c (the
// adjoined identity is implicit in seeding the pair itself).
EqRelation left_congruence_closure(const FiniteInverseSemigroup& S, const GenPairSet& pairs);

EqRelation left_congruence_closure(const FiniteInverseSemigroup& S,
                                   const std::vector<std::pair<int, int>>& pairs);

// True iff a rho b implies ca rho cb for all c.
bool is_left_congruence(const FiniteInverseSemigroup& S, const EqRelation& rho);

// True iff a rho b implies ac rho bc for all c.
bool is_right_compatible(const FiniteInverseSemigroup& S, const EqRelation& rho);

// All congruences on a finite semilattice E (given as a semigroup all of
// whose elements are idempotent).  Below `partition_threshold` elements
// this filters every set partition; above it, principal congruences are
// closed under join.  Results are sorted canonically.
std::vector<EqRelation> semilattice_congruences(const FiniteInverseSemigroup& E,
                                                std::size_t partition_threshold = 12);

}  // namespace icl

#endif
