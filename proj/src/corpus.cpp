#include "icl/corpus.hpp"

namespace icl {

namespace {

PartialPerm partial_identity(std::size_t degree, std::size_t defined_prefix) {
  std::vector<int> img(degree, PartialPerm::kUndef);
  for (std::size_t i = 0; i < defined_prefix; ++i)
    img[i] = static_cast<int>(i);
  return PartialPerm(std::move(img));
}

}  // namespace

FiniteInverseSemigroup chain_semilattice(std::size_t n) {
  std::size_t degree = n > 1 ? n - 1 : 1;
  std::vector<PartialPerm> gens;
  for (std::size_t j = 0; j < n; ++j)
    gens.push_back(partial_identity(degree, j));
  return FiniteInverseSemigroup::closure(gens);
}

FiniteInverseSemigroup diamond_semilattice() {
  std::vector<PartialPerm> gens = {
      PartialPerm({0, 1}),
      PartialPerm({0, PartialPerm::kUndef}),
      PartialPerm({PartialPerm::kUndef, 1}),
      PartialPerm({PartialPerm::kUndef, PartialPerm::kUndef}),
  };
  return FiniteInverseSemigroup::closure(gens);
}

FiniteInverseSemigroup symmetric_inverse_2() {
  // The transposition and the map 1 -> 2.
  std::vector<PartialPerm> gens = {
      PartialPerm({1, 0}),
      PartialPerm({1, PartialPerm::kUndef}),
  };
  return FiniteInverseSemigroup::closure(gens);
}

FiniteInverseSemigroup brandt_2() {
  std::vector<PartialPerm> gens = {PartialPerm({1, PartialPerm::kUndef})};
  return FiniteInverseSemigroup::closure(gens);
}

FiniteInverseSemigroup clifford_6() {
  // A three cycle acting on two disjoint triples, together with the
  // identity on the first triple; restriction is the linking map.
  const int u = PartialPerm::kUndef;
  std::vector<PartialPerm> gens = {
      PartialPerm({1, 2, 0, 4, 5, 3}),
      PartialPerm({0, 1, 2, u, u, u}),
  };
  return FiniteInverseSemigroup::closure(gens);
}

std::vector<CorpusEntry> verification_corpus() {
  std::vector<CorpusEntry> out;
  for (std::size_t n = 2; n <= 5; ++n)
    out.push_back({"chain" + std::to_string(n), chain_semilattice(n)});
  out.push_back({"diamond", diamond_semilattice()});
  out.push_back({"sym_inv_2", symmetric_inverse_2()});
  out.push_back({"map12_closure", brandt_2()});
  out.push_back({"brandt_2", FiniteInverseSemigroup::closure(
                                 {PartialPerm({1, PartialPerm::kUndef}),
                                  PartialPerm({PartialPerm::kUndef, 0})})});
  out.push_back({"clifford_6", clifford_6()});
  return out;
}

}  // namespace icl
