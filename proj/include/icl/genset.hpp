#ifndef ICL_GENSET_HPP
#define ICL_GENSET_HPP

#include <utility>
#include <vector>

#include "icl/eq_relation.hpp"
#include "icl/pairs.hpp"
#include "icl/semigroup.hpp"
#include "icl/trace_kernel.hpp"

namespace icl {

// A generating set rewritten so every pair is either a pair of
// idempotents or joins an element to an R-related idempotent.
struct NormalizedGenSet {
  std::vector<std::pair<int, int>> idempotent_pairs;  // within E x E
  std::vector<std::pair<int, int>> r_pairs;           // (a, e) or (e, a) with a R e

  GenPairSet as_genpairs() const;
};

// Replaces each generator (a, b) by three pairs of the restricted shape
// with the same left-congruence closure:
//   (a^-1 b, a^-1 b b^-1 a), (a^-1 a, a^-1 b b^-1 a), (b^-1 a a^-1 b, b^-1 b).
NormalizedGenSet normalize_generators(const FiniteInverseSemigroup& S, const GenPairSet& gens);

// Trace of the join of the idempotent separating congruence of an
// inverse subsemigroup Y with the trace-minimal congruence of tau:
// the congruence on E generated by tau together with the conjugates
// (a e a^-1, a f a^-1) for (e, f) in tau, a in Y.
TraceCongruence trace_of_join(const FiniteInverseSemigroup& S, const TraceCongruence& tau,
                              const Bitset& Y);

// The idempotent separating left congruence attached to an inverse
// subsemigroup Y, i.e. the one whose inverse kernel is generated by
// Y and the idempotents.
EqRelation idempotent_separating_of(const FiniteInverseSemigroup& S, const Bitset& Y);

bool has_trivial_class(const EqRelation& rho, int a);

struct UniversalFgReport {
  std::vector<int> maximal_idempotents;
  bool every_idempotent_below_maximal = false;
  bool witness_found = false;
  std::vector<int> witness_idempotents;  // X, a subset of E
  std::vector<int> witness_elements;     // Y, generators of the kernel part
};

// Exhibits a finite generating pair for the universal congruence: a set
// X of idempotents and a set Y of elements with
// omega = (idempotent separating congruence of <Y>) join
//         (trace-minimal congruence of <X x X>).
// Always succeeds on a finite semigroup; the search is by ascending
// witness size, bounded by `max_kernel_generators`.
UniversalFgReport universal_fg_analysis(const FiniteInverseSemigroup& S,
                                        std::size_t max_kernel_generators = 3);

}  // namespace icl

#endif
