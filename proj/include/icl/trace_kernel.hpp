#ifndef ICL_TRACE_KERNEL_HPP
#define ICL_TRACE_KERNEL_HPP

#include <vector>

#include "icl/eq_relation.hpp"
#include "icl/semigroup.hpp"

namespace icl {

// A congruence on E(S), indexed by E-position (see
// FiniteInverseSemigroup::idempotents()).
using TraceCongruence = EqRelation;

// The kernel of a left congruence: a full subsemigroup, in general not
// inverse.
struct KernelSub {
  Bitset member;

  bool contains(int a) const { return member.test(static_cast<std::size_t>(a)); }
  std::vector<int> members() const { return member.members(); }
  bool operator==(const KernelSub& o) const { return member == o.member; }
};

// rho restricted to E(S), reindexed by E-position.
TraceCongruence trace_of(const FiniteInverseSemigroup& S, const EqRelation& rho);

// Union of the rho-classes of idempotents.
KernelSub kernel_of(const FiniteInverseSemigroup& S, const EqRelation& rho);

// { a : a rho a a^-1 }; always a full inverse subsemigroup.
FullInverseSub inverse_kernel_of(const FiniteInverseSemigroup& S, const EqRelation& rho);

struct Normalizers {
  Bitset left;          // a^-1 e a preserves tau
  Bitset right;         // a e a^-1 preserves tau
  FullInverseSub both;  // N(tau) = left-and-right; full inverse
};

Normalizers normalizers(const FiniteInverseSemigroup& S, const TraceCongruence& tau);

// C(tau) = { a in N(tau) : exists e in E with e tau a^-1 a and ae = e }.
FullInverseSub centralizer(const FiniteInverseSemigroup& S, const TraceCongruence& tau);

// Minimum left congruence with trace tau:
//   a ~ b  iff  a^-1 a tau b^-1 b and some idempotent e tau a^-1 a has ae = be.
EqRelation trace_minimum(const FiniteInverseSemigroup& S, const TraceCongruence& tau);

// Maximum left congruence with trace tau:
//   a ~ b  iff  a^-1 b b^-1 a tau a^-1 a, b^-1 a a^-1 b tau b^-1 b,
//               and a^-1 b, b^-1 a both left-normalize tau.
EqRelation trace_maximum(const FiniteInverseSemigroup& S, const TraceCongruence& tau);

// The unique idempotent separating left congruence with inverse kernel T:
//   a ~ b  iff  a^-1 b in T, a^-1 b b^-1 a = a^-1 a, b^-1 a a^-1 b = b^-1 b.
EqRelation idempotent_separating(const FiniteInverseSemigroup& S, const FullInverseSub& T);

// Green's R as an equivalence relation on S.
EqRelation green_r_relation(const FiniteInverseSemigroup& S);

// The reversed-inverse relation { (a^-1, b^-1) : (a, b) in rho }.  For a
// left congruence this is the corresponding right congruence with the
// same trace and inverse kernel.
EqRelation reversed_congruence(const FiniteInverseSemigroup& S, const EqRelation& rho);

// Checks that tau (E-indexed) is a congruence on the semilattice E(S).
bool is_trace_congruence(const FiniteInverseSemigroup& S, const TraceCongruence& tau);

}  // namespace icl

#endif
