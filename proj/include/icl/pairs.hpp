#ifndef ICL_PAIRS_HPP
#define ICL_PAIRS_HPP

#include <utility>
#include <vector>

#include "icl/eq_relation.hpp"
#include "icl/semigroup.hpp"
#include "icl/trace_kernel.hpp"

namespace icl {

// The coordinates of a left congruence: a congruence on E(S) together
// with a full inverse subsemigroup.  Validity is a predicate, not a
// construction guarantee.
struct IKPair {
  TraceCongruence tau;  // E-indexed
  FullInverseSub sub;

  bool operator==(const IKPair& o) const { return tau == o.tau && sub == o.sub; }
};

// Componentwise containment in C(E) x V(S); coincides with containment
// of the corresponding left congruences.
bool pair_leq(const IKPair& p, const IKPair& q);

// Two conditions: sub is inside the normalizer of tau, and whenever
// some e tau x^-1 x with xe in sub and some f tau x x^-1 with fx in
// sub exist, x itself lies in sub.  Throws InputError on malformed
// components.
bool is_inverse_congruence_pair(const FiniteInverseSemigroup& S, const IKPair& pair);

// The left congruence with coordinates `pair`:
//   x ~ y  iff  x^-1 y in sub, x^-1 y y^-1 x tau x^-1 x, y^-1 x x^-1 y tau y^-1 y.
// Requires a valid pair (InputError otherwise).
EqRelation congruence_from_pair(const FiniteInverseSemigroup& S, const IKPair& pair);

// Coordinate extraction (trace, inverse kernel); no validation.
IKPair coordinates_of(const FiniteInverseSemigroup& S, const EqRelation& rho);

// Same, but checks that rho is a left congruence first.
IKPair pair_from_congruence(const FiniteInverseSemigroup& S, const EqRelation& rho);

struct Decomposition {
  EqRelation trace_part;  // minimum left congruence with trace(rho)
  EqRelation idsep_part;  // rho meet Green's R
  // For each kernel element a, an idempotent f with
  // f idsep_part f*a and f*a trace_part a.
  std::vector<std::pair<int, int>> kernel_witnesses;  // (a, f)
};

// Splits rho into its trace-minimal and idempotent separating parts;
// their transitive join is rho again.
Decomposition decompose(const FiniteInverseSemigroup& S, const EqRelation& rho);

// Componentwise intersection in the product of the two coordinate
// lattices.  Inputs need only be well-formed; the meet of two valid
// pairs is again valid and names the congruence meet.
IKPair meet_pairs(const FiniteInverseSemigroup& S, const IKPair& p1, const IKPair& p2);

// Join computed on the coordinates: the subsemigroup join of the two
// kernels, the least congruence on E containing both traces that the
// join normalizes, and the saturation of the kernel join.  The result
// is always a valid pair; on valid inputs it names the congruence join.
IKPair join_pairs(const FiniteInverseSemigroup& S, const IKPair& p1, const IKPair& p2);

// The congruence on N(tau) induced by the trace-minimal congruence,
// restricted to N(tau); members lists the elements of N(tau).
RestrictedRelation normalizer_congruence(const FiniteInverseSemigroup& S,
                                         const TraceCongruence& tau);

// All valid pairs with first component tau, via saturated full inverse
// subsemigroups of the normalizer.  Sorted by subsemigroup bitmask.
std::vector<IKPair> trace_class(const FiniteInverseSemigroup& S, const TraceCongruence& tau);

// Number of full inverse subsemigroups of the quotient N(tau) by the
// normalizer congruence; equals trace_class(S, tau).size().
std::size_t trace_class_size_via_quotient(const FiniteInverseSemigroup& S,
                                          const TraceCongruence& tau);

// All valid pairs with second component T, filtered by the fixed-kernel
// reformulation of the pair conditions: tau normal in T, and for each
// a outside T and e tau a^-1 a with ae in T, aa^-1 is not tau-related
// to a e a^-1.
std::vector<IKPair> ik_class(const FiniteInverseSemigroup& S, const FullInverseSub& T);

// Alternative closure test scanning only the elements minimal with
// respect to T; requires T inside N(tau) (InputError otherwise) and
// finiteness.
bool is_icp_via_minimals(const FiniteInverseSemigroup& S, const IKPair& pair);

// Join-map: the transitive join of the trace-minimal congruence of tau
// and the idempotent separating congruence of sub.  Defined for every
// well-formed pair, valid or not.
EqRelation congruence_from_pair_join(const FiniteInverseSemigroup& S, const IKPair& pair);

// --- Two-sided congruences -------------------------------------------------

// T self conjugate, N(tau) = S, and the two kernel conditions:
// xe in T with e tau x^-1 x forces x into T, and every x in T has
// x x^-1 tau x^-1 x.
bool is_congruence_pair(const FiniteInverseSemigroup& S, const IKPair& pair);

// P = { (a, b) : a^-1 a tau b^-1 b, a b^-1 in T }; requires a valid
// congruence pair.
EqRelation two_sided_from_pair(const FiniteInverseSemigroup& S, const IKPair& pair);

// Direct test: rho is a left congruence that is also right compatible.
bool is_two_sided(const FiniteInverseSemigroup& S, const EqRelation& rho);

// --- Whole-lattice assembly ------------------------------------------------

struct LatticeNode {
  IKPair pair;
  EqRelation rho;
};

struct CongruenceLattice {
  std::vector<LatticeNode> nodes;
  std::vector<bool> leq;                          // n*n containment matrix
  std::vector<std::pair<int, int>> hasse;         // cover edges (lower, upper)
  std::size_t size() const { return nodes.size(); }
  bool below(int i, int j) const { return leq[static_cast<std::size_t>(i) * nodes.size() + j]; }
};

// Enumerates trace congruences and full inverse subsemigroups, filters
// the valid pairs, materializes each left congruence and computes the
// containment order plus its cover edges.
CongruenceLattice build_lattice(const FiniteInverseSemigroup& S);

}  // namespace icl

#endif
