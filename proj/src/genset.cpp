#include "icl/genset.hpp"

#include <algorithm>
#include <set>

#include "icl/errors.hpp"

namespace icl {

GenPairSet NormalizedGenSet::as_genpairs() const {
  GenPairSet out;
  for (auto [a, b] : idempotent_pairs)
    out.add(a, b);
  for (auto [a, b] : r_pairs)
    out.add(a, b);
  return out;
}

NormalizedGenSet normalize_generators(const FiniteInverseSemigroup& S, const GenPairSet& gens) {
  NormalizedGenSet out;
  std::set<std::pair<int, int>> seen, emitted;
  auto push = [&](int x, int y) {
    if (x == y)
      return;  // reflexive pairs generate nothing
    if (!emitted.insert(std::minmax(x, y)).second)
      return;
    if (S.is_idempotent(x) && S.is_idempotent(y)) {
      out.idempotent_pairs.emplace_back(x, y);
      out.idempotent_pairs.emplace_back(y, x);
      return;
    }
    internal_check((S.is_idempotent(y) || S.is_idempotent(x)) && S.green_r(x, y),
                   "normalized pair is not of the restricted shape");
    out.r_pairs.emplace_back(x, y);
    out.r_pairs.emplace_back(y, x);
  };
  for (auto [a, b] : gens.pairs()) {
    if (a == b || !seen.insert(std::minmax(a, b)).second)
      continue;  // handle each unordered pair once
    int ai = S.inverse(a), bi = S.inverse(b);
    int ab = S.product(ai, b);                               // a^-1 b
    int e = S.product(S.product(ai, S.product(b, bi)), a);   // a^-1 b b^-1 a
    int f = S.product(S.product(bi, S.product(a, ai)), b);   // b^-1 a a^-1 b
    push(ab, e);
    push(S.range_idempotent(a), e);
    push(f, S.range_idempotent(b));
  }
  return out;
}

TraceCongruence trace_of_join(const FiniteInverseSemigroup& S, const TraceCongruence& tau,
                              const Bitset& Y) {
  if (!is_inverse_sub(S, Y))
    throw InputError("Y is not an inverse subsemigroup");
  FiniteInverseSemigroup E = idempotent_semilattice(S);
  std::vector<std::pair<int, int>> seed;
  const auto& idem = S.idempotents();
  for (std::size_t i = 0; i < idem.size(); ++i)
    for (std::size_t j = i + 1; j < idem.size(); ++j) {
      if (!tau.related(static_cast<int>(i), static_cast<int>(j)))
        continue;
      seed.emplace_back(static_cast<int>(i), static_cast<int>(j));
      for (int a : Y.members()) {
        int u = S.idempotent_position(S.conj_up(a, idem[i]));
        int v = S.idempotent_position(S.conj_up(a, idem[j]));
        seed.emplace_back(u, v);
      }
    }
  return left_congruence_closure(E, seed);
}

EqRelation idempotent_separating_of(const FiniteInverseSemigroup& S, const Bitset& Y) {
  return idempotent_separating(S, full_inverse_closure(S, Y));
}

bool has_trivial_class(const EqRelation& rho, int a) {
  for (std::size_t i = 0; i < rho.size(); ++i)
    if (static_cast<int>(i) != a && rho.related(a, static_cast<int>(i)))
      return false;
  return true;
}

namespace {

// Ascending-size subsets of `universe`, visitor returns true to stop.
template <typename F>
bool for_subsets_up_to(const std::vector<int>& universe, std::size_t max_size, F&& visit) {
  std::vector<int> cur;
  for (std::size_t target = 0; target <= std::min(max_size, universe.size()); ++target) {
    std::vector<std::size_t> idx(target);
    for (std::size_t i = 0; i < target; ++i)
      idx[i] = i;
    for (;;) {
      cur.clear();
      for (auto i : idx)
        cur.push_back(universe[i]);
      if (visit(cur))
        return true;
      if (target == 0)
        break;
      std::size_t pos = target;
      while (pos > 0 && idx[pos - 1] == universe.size() - target + pos - 1)
        --pos;
      if (pos == 0)
        break;
      ++idx[pos - 1];
      for (std::size_t i = pos; i < target; ++i)
        idx[i] = idx[i - 1] + 1;
    }
  }
  return false;
}

}  // namespace

UniversalFgReport universal_fg_analysis(const FiniteInverseSemigroup& S,
                                        std::size_t max_kernel_generators) {
  UniversalFgReport rep;
  const auto& idem = S.idempotents();
  for (int e : idem) {
    bool maximal = true;
    for (int f : idem)
      if (f != e && S.natural_leq(e, f)) {
        maximal = false;
        break;
      }
    if (maximal)
      rep.maximal_idempotents.push_back(e);
  }
  rep.every_idempotent_below_maximal = true;
  for (int e : idem) {
    bool below = false;
    for (int m : rep.maximal_idempotents)
      if (S.natural_leq(e, m)) {
        below = true;
        break;
      }
    if (!below) {
      rep.every_idempotent_below_maximal = false;
      break;
    }
  }

  // Candidate idempotent sets: maximal idempotents plus one covering
  // layer below them; candidate kernel generators: small subsets of S.
  std::vector<int> idem_universe = rep.maximal_idempotents;
  for (int e : idem) {
    bool covered = std::find(idem_universe.begin(), idem_universe.end(), e) != idem_universe.end();
    if (!covered)
      idem_universe.push_back(e);
  }
  std::vector<int> elem_universe;
  for (std::size_t a = 0; a < S.size(); ++a)
    elem_universe.push_back(static_cast<int>(a));

  EqRelation omega = EqRelation::universal(S.size());
  FiniteInverseSemigroup E = idempotent_semilattice(S);

  for_subsets_up_to(elem_universe, max_kernel_generators, [&](const std::vector<int>& ys) {
    Bitset yb(S.size());
    for (int y : ys)
      yb.set(static_cast<std::size_t>(y));
    Bitset ycl = inverse_subsemigroup_closure(S, yb);
    EqRelation chi = ys.empty() ? EqRelation(S.size()) : idempotent_separating_of(S, ycl);
    return for_subsets_up_to(idem_universe, idem_universe.size(), [&](const std::vector<int>& xs) {
      std::vector<std::pair<int, int>> pairs;
      for (std::size_t i = 0; i < xs.size(); ++i)
        for (std::size_t j = i + 1; j < xs.size(); ++j)
          pairs.emplace_back(S.idempotent_position(xs[i]), S.idempotent_position(xs[j]));
      EqRelation tau = left_congruence_closure(E, pairs);
      EqRelation nu = trace_minimum(S, tau);
      if (eq_join_transitive(chi, nu) == omega) {
        rep.witness_found = true;
        rep.witness_idempotents = xs;
        rep.witness_elements = ys;
        return true;
      }
      return false;
    });
  });
  return rep;
}

}  // namespace icl
