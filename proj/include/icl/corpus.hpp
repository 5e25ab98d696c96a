#ifndef ICL_CORPUS_HPP
#define ICL_CORPUS_HPP

#include <string>
#include <vector>

#include "icl/semigroup.hpp"

namespace icl {

struct CorpusEntry {
  std::string name;
  FiniteInverseSemigroup semigroup;
};

// Chain semilattice with n elements (partial identities on {1..n-1}).
FiniteInverseSemigroup chain_semilattice(std::size_t n);

// The four idempotents of the symmetric inverse monoid on two points.
FiniteInverseSemigroup diamond_semilattice();

// The symmetric inverse monoid on two points (7 elements).
FiniteInverseSemigroup symmetric_inverse_2();

// The five element Brandt semigroup, generated by the map 1 -> 2.
FiniteInverseSemigroup brandt_2();

// A six element Clifford semigroup: two cyclic groups of order three
// over a two element chain.
FiniteInverseSemigroup clifford_6();

// The pinned verification corpus: chains of lengths 2-5, the diamond
// semilattice, the symmetric inverse monoid on two points, the Brandt
// semigroup both as such and as the closure of the single map 1 -> 2,
// and the Clifford example.
std::vector<CorpusEntry> verification_corpus();

}  // namespace icl

#endif
