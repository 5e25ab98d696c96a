#ifndef ICL_TESTS_HELPERS_HPP
#define ICL_TESTS_HELPERS_HPP

#include <random>
#include <vector>

#include "icl/eq_relation.hpp"
#include "icl/semigroup.hpp"
#include "icl/trace_kernel.hpp"

namespace icl::testing {

// Element lookup by 1-based image array, 0 meaning undefined; so on two
// points {2, 0} is the map 1 -> 2.
inline int elem(const FiniteInverseSemigroup& S, const std::vector<int>& img1) {
  std::vector<int> img;
  img.reserve(img1.size());
  for (int v : img1)
    img.push_back(v == 0 ? PartialPerm::kUndef : v - 1);
  int idx = S.index_of(PartialPerm(img));
  if (idx < 0)
    throw std::runtime_error("test element not found");
  return idx;
}

inline EqRelation rel_from_blocks(std::size_t n, const std::vector<std::vector<int>>& blocks) {
  EqRelation r(n);
  for (const auto& blk : blocks)
    for (std::size_t i = 1; i < blk.size(); ++i)
      r.unite(blk[0], blk[i]);
  return r;
}

// Trace congruence from blocks of S-element indices (idempotents).
inline TraceCongruence trace_from_blocks(const FiniteInverseSemigroup& S,
                                         const std::vector<std::vector<int>>& blocks) {
  TraceCongruence tau(S.num_idempotents());
  for (const auto& blk : blocks)
    for (std::size_t i = 1; i < blk.size(); ++i)
      tau.unite(S.idempotent_position(blk[0]), S.idempotent_position(blk[i]));
  return tau;
}

// Reference closure by literal generating-sequence search: walks the
// step graph w -> w' where w = c*x, w' = c*y for a generating pair
// (x, y) and c ranging over the elements and the adjoined identity.
// Independent of the worklist implementation.
inline EqRelation r_sequence_closure(const FiniteInverseSemigroup& S,
                                     const std::vector<std::pair<int, int>>& sym_pairs) {
  std::vector<std::vector<int>> adj(S.size());
  auto edge = [&](int u, int v) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  };
  for (auto [x, y] : sym_pairs) {
    edge(x, y);  // c = adjoined identity
    for (std::size_t c = 0; c < S.size(); ++c)
      edge(S.product(static_cast<int>(c), x), S.product(static_cast<int>(c), y));
  }
  EqRelation rel(S.size());
  for (std::size_t start = 0; start < S.size(); ++start) {
    std::vector<int> stack{static_cast<int>(start)};
    while (!stack.empty()) {
      int w = stack.back();
      stack.pop_back();
      for (int v : adj[w])
        if (rel.unite(static_cast<int>(start), v))
          stack.push_back(v);
    }
  }
  return rel;
}

// Brute-force enumeration of all inverse subsemigroups (not necessarily
// full) by filtering subsets; only for small semigroups.
inline std::vector<Bitset> all_inverse_subs_brute(const FiniteInverseSemigroup& S) {
  std::vector<Bitset> out;
  const std::size_t m = S.size();
  for (std::size_t mask = 1; mask < (std::size_t(1) << m); ++mask) {
    Bitset b(m);
    for (std::size_t i = 0; i < m; ++i)
      if (mask & (std::size_t(1) << i))
        b.set(i);
    if (is_inverse_sub(S, b))
      out.push_back(b);
  }
  return out;
}

inline std::vector<Bitset> full_inverse_subs_brute(const FiniteInverseSemigroup& S) {
  std::vector<Bitset> out;
  for (const auto& b : all_inverse_subs_brute(S))
    if (is_full_inverse_sub(S, b))
      out.push_back(b);
  return out;
}

inline std::vector<std::pair<int, int>> random_symmetric_pairs(std::mt19937& rng,
                                                               std::size_t size,
                                                               std::size_t count) {
  std::uniform_int_distribution<int> pick(0, static_cast<int>(size) - 1);
  std::vector<std::pair<int, int>> out;
  for (std::size_t i = 0; i < count; ++i) {
    int a = pick(rng), b = pick(rng);
    out.emplace_back(a, b);
    out.emplace_back(b, a);
  }
  return out;
}

}  // namespace icl::testing

#endif
