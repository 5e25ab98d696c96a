#include "icl/pairs.hpp"

#include <algorithm>
#include <map>

#include "icl/errors.hpp"

namespace icl {

namespace {

bool tau_related_elems(const FiniteInverseSemigroup& S, const TraceCongruence& tau, int e, int f) {
  int pe = S.idempotent_position(e);
  int pf = S.idempotent_position(f);
  internal_check(pe >= 0 && pf >= 0, "trace lookup on non-idempotent");
  return tau.related(pe, pf);
}

void validate_pair_shape(const FiniteInverseSemigroup& S, const IKPair& pair) {
  if (pair.tau.size() != S.num_idempotents())
    throw InputError("trace congruence has wrong size");
  if (!is_trace_congruence(S, pair.tau))
    throw InputError("first component is not a congruence on E(S)");
  if (pair.sub.member.size() != S.size() || !is_full_inverse_sub(S, pair.sub.member))
    throw InputError("second component is not a full inverse subsemigroup");
}

}  // namespace

bool pair_leq(const IKPair& p, const IKPair& q) {
  return p.tau.subrelation_of(q.tau) && p.sub.member.subset_of(q.sub.member);
}

bool is_inverse_congruence_pair(const FiniteInverseSemigroup& S, const IKPair& pair) {
  validate_pair_shape(S, pair);
  Normalizers n = normalizers(S, pair.tau);
  if (!pair.sub.member.subset_of(n.both.member))
    return false;
  for (std::size_t x = 0; x < S.size(); ++x) {
    int xi = static_cast<int>(x);
    if (pair.sub.contains(xi))
      continue;
    bool has_e = false, has_f = false;
    for (int e : S.idempotents()) {
      if (!has_e && tau_related_elems(S, pair.tau, e, S.range_idempotent(xi)) &&
          pair.sub.contains(S.product(xi, e)))
        has_e = true;
      if (!has_f && tau_related_elems(S, pair.tau, e, S.domain_idempotent(xi)) &&
          pair.sub.contains(S.product(e, xi)))
        has_f = true;
      if (has_e && has_f)
        return false;  // forced x into sub, but x is outside
    }
  }
  return true;
}

EqRelation congruence_from_pair(const FiniteInverseSemigroup& S, const IKPair& pair) {
  if (!is_inverse_congruence_pair(S, pair))
    throw InputError("not an inverse congruence pair");
  EqRelation rel(S.size());
  for (std::size_t a = 0; a < S.size(); ++a) {
    for (std::size_t b = a + 1; b < S.size(); ++b) {
      int x = static_cast<int>(a), y = static_cast<int>(b);
      if (!pair.sub.contains(S.product(S.inverse(x), y)))
        continue;
      int lhs = S.product(S.product(S.inverse(x), S.domain_idempotent(y)), x);
      int rhs = S.product(S.product(S.inverse(y), S.domain_idempotent(x)), y);
      if (tau_related_elems(S, pair.tau, lhs, S.range_idempotent(x)) &&
          tau_related_elems(S, pair.tau, rhs, S.range_idempotent(y)))
        rel.unite(x, y);
    }
  }
  return rel;
}

IKPair coordinates_of(const FiniteInverseSemigroup& S, const EqRelation& rho) {
  return IKPair{trace_of(S, rho), inverse_kernel_of(S, rho)};
}

IKPair pair_from_congruence(const FiniteInverseSemigroup& S, const EqRelation& rho) {
  if (rho.size() != S.size() || !is_left_congruence(S, rho))
    throw InputError("relation is not a left congruence");
  return coordinates_of(S, rho);
}

Decomposition decompose(const FiniteInverseSemigroup& S, const EqRelation& rho) {
  Decomposition out{trace_minimum(S, trace_of(S, rho)), eq_meet(rho, green_r_relation(S)), {}};
  KernelSub k = kernel_of(S, rho);
  for (int a : k.members()) {
    int e = -1;
    for (int cand : S.idempotents())
      if (rho.related(a, cand)) {
        e = cand;
        break;
      }
    internal_check(e >= 0, "kernel element without idempotent in class");
    int f = S.product(e, S.domain_idempotent(a));
    out.kernel_witnesses.emplace_back(a, f);
  }
  return out;
}

IKPair meet_pairs(const FiniteInverseSemigroup& S, const IKPair& p1, const IKPair& p2) {
  validate_pair_shape(S, p1);
  validate_pair_shape(S, p2);
  IKPair out{eq_meet(p1.tau, p2.tau), FullInverseSub{p1.sub.member & p2.sub.member}};
  if (is_inverse_congruence_pair(S, p1) && is_inverse_congruence_pair(S, p2))
    internal_check(is_inverse_congruence_pair(S, out), "meet of valid pairs is not a pair");
  return out;
}

RestrictedRelation normalizer_congruence(const FiniteInverseSemigroup& S,
                                         const TraceCongruence& tau) {
  Normalizers n = normalizers(S, tau);
  EqRelation nu = trace_minimum(S, tau);
  return restrict_relation(nu, n.both.member.members());
}

IKPair join_pairs(const FiniteInverseSemigroup& S, const IKPair& p1, const IKPair& p2) {
  validate_pair_shape(S, p1);
  validate_pair_shape(S, p2);

  FullInverseSub tstar{inverse_subsemigroup_closure(S, p1.sub.member | p2.sub.member)};

  // Least congruence xi on E containing both traces and normalized by
  // tstar: grow by conjugated pairs until stable.
  FiniteInverseSemigroup E = idempotent_semilattice(S);
  TraceCongruence xi = eq_join_transitive(p1.tau, p2.tau);
  for (;;) {
    std::vector<std::pair<int, int>> extra;
    auto blocks = xi.blocks();
    for (int a : tstar.members()) {
      for (const auto& blk : blocks) {
        for (std::size_t i = 0; i + 1 < blk.size(); ++i)
          for (std::size_t j = i + 1; j < blk.size(); ++j) {
            int e = S.idempotents()[blk[i]];
            int f = S.idempotents()[blk[j]];
            int du = S.idempotent_position(S.conj_up(a, e));
            int dv = S.idempotent_position(S.conj_up(a, f));
            if (!xi.related(du, dv))
              extra.emplace_back(du, dv);
            int eu = S.idempotent_position(S.conj_down(a, e));
            int ev = S.idempotent_position(S.conj_down(a, f));
            if (!xi.related(eu, ev))
              extra.emplace_back(eu, ev);
          }
      }
    }
    if (extra.empty())
      break;
    std::vector<std::pair<int, int>> seed = std::move(extra);
    for (std::size_t i = 0; i < xi.size(); ++i)
      seed.emplace_back(static_cast<int>(i), xi.find(static_cast<int>(i)));
    xi = left_congruence_closure(E, seed);
  }

  // Saturate the kernel join by the normalizer congruence of xi.
  RestrictedRelation psi = normalizer_congruence(S, xi);
  Bitset v(S.size());
  for (std::size_t pos = 0; pos < psi.indices.size(); ++pos) {
    for (std::size_t q = 0; q < psi.indices.size(); ++q)
      if (psi.rel.related(static_cast<int>(pos), static_cast<int>(q)) &&
          tstar.contains(psi.indices[q])) {
        v.set(static_cast<std::size_t>(psi.indices[pos]));
        break;
      }
  }
  IKPair out{xi, FullInverseSub{v}};
  internal_check(is_inverse_congruence_pair(S, out), "join of pairs is not a pair");
  return out;
}

std::vector<IKPair> trace_class(const FiniteInverseSemigroup& S, const TraceCongruence& tau) {
  Normalizers n = normalizers(S, tau);
  RestrictedRelation psi = normalizer_congruence(S, tau);
  std::vector<IKPair> out;
  for (const FullInverseSub& T : full_inverse_subsemigroups(S)) {
    if (!T.member.subset_of(n.both.member))
      continue;
    bool saturated = true;
    for (std::size_t pos = 0; pos < psi.indices.size() && saturated; ++pos) {
      if (!T.contains(psi.indices[pos]))
        continue;
      for (std::size_t q = 0; q < psi.indices.size(); ++q)
        if (psi.rel.related(static_cast<int>(pos), static_cast<int>(q)) &&
            !T.contains(psi.indices[q])) {
          saturated = false;
          break;
        }
    }
    if (saturated)
      out.push_back(IKPair{tau, T});
  }
  std::sort(out.begin(), out.end(),
            [](const IKPair& a, const IKPair& b) { return a.sub < b.sub; });
  internal_check(out.size() == trace_class_size_via_quotient(S, tau),
                 "trace class size disagrees with quotient count");
  return out;
}

std::size_t trace_class_size_via_quotient(const FiniteInverseSemigroup& S,
                                          const TraceCongruence& tau) {
  RestrictedRelation psi = normalizer_congruence(S, tau);
  const std::size_t n = psi.indices.size();

  // Class representatives and labels inside the normalizer.
  std::vector<int> label(n);
  std::map<int, int> root_to_class;
  std::vector<int> rep;
  for (std::size_t i = 0; i < n; ++i) {
    int r = psi.rel.find(static_cast<int>(i));
    auto [it, fresh] = root_to_class.emplace(r, static_cast<int>(rep.size()));
    if (fresh)
      rep.push_back(static_cast<int>(i));
    label[i] = it->second;
  }
  std::vector<int> pos_of(S.size(), -1);
  for (std::size_t i = 0; i < n; ++i)
    pos_of[psi.indices[i]] = static_cast<int>(i);

  // Induced product on classes; check it is independent of representatives.
  std::vector<std::vector<int>> table(rep.size(), std::vector<int>(rep.size(), -1));
  for (std::size_t i = 0; i < rep.size(); ++i)
    for (std::size_t j = 0; j < rep.size(); ++j) {
      int p = S.product(psi.indices[rep[i]], psi.indices[rep[j]]);
      internal_check(pos_of[p] >= 0, "normalizer not closed under product");
      table[i][j] = label[pos_of[p]];
    }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      int p = S.product(psi.indices[i], psi.indices[j]);
      internal_check(table[label[i]][label[j]] == label[pos_of[p]],
                     "normalizer congruence is not two sided");
    }

  FiniteInverseSemigroup quotient = FiniteInverseSemigroup::from_table(table);
  return full_inverse_subsemigroups(quotient).size();
}

std::vector<IKPair> ik_class(const FiniteInverseSemigroup& S, const FullInverseSub& T) {
  if (!is_full_inverse_sub(S, T.member))
    throw InputError("not a full inverse subsemigroup");
  FiniteInverseSemigroup E = idempotent_semilattice(S);
  std::vector<IKPair> out;
  for (const TraceCongruence& tau : semilattice_congruences(E)) {
    Normalizers n = normalizers(S, tau);
    if (!T.member.subset_of(n.both.member))
      continue;
    bool ok = true;
    for (std::size_t a = 0; a < S.size() && ok; ++a) {
      int ai = static_cast<int>(a);
      if (T.contains(ai))
        continue;
      for (int e : S.idempotents()) {
        if (!T.contains(S.product(ai, e)))
          continue;
        if (!tau_related_elems(S, tau, S.range_idempotent(ai), e))
          continue;
        if (tau_related_elems(S, tau, S.domain_idempotent(ai), S.conj_up(ai, e))) {
          ok = false;
          break;
        }
      }
    }
    if (ok)
      out.push_back(IKPair{tau, T});
  }
  return out;
}

bool is_icp_via_minimals(const FiniteInverseSemigroup& S, const IKPair& pair) {
  validate_pair_shape(S, pair);
  Normalizers n = normalizers(S, pair.tau);
  if (!pair.sub.member.subset_of(n.both.member))
    throw InputError("subsemigroup not contained in the normalizer");

  // Minimum of a tau-class is its meet when the meet lies in the class.
  auto is_class_minimum = [&](int e) {
    int meet = e;
    for (int f : S.idempotents())
      if (tau_related_elems(S, pair.tau, e, f))
        meet = S.product(meet, f);
    return meet == e;
  };

  for (std::size_t a = 0; a < S.size(); ++a) {
    int ai = static_cast<int>(a);
    if (pair.sub.contains(ai))
      continue;
    bool minimal = true;
    for (int e : S.idempotents()) {
      int ae = S.product(ai, e);
      if (ae != ai && !pair.sub.contains(ae)) {
        minimal = false;
        break;
      }
    }
    if (!minimal)
      continue;
    if (!is_class_minimum(S.domain_idempotent(ai)) && !is_class_minimum(S.range_idempotent(ai)))
      return false;
  }
  return true;
}

EqRelation congruence_from_pair_join(const FiniteInverseSemigroup& S, const IKPair& pair) {
  validate_pair_shape(S, pair);
  return eq_join_transitive(trace_minimum(S, pair.tau), idempotent_separating(S, pair.sub));
}

bool is_congruence_pair(const FiniteInverseSemigroup& S, const IKPair& pair) {
  validate_pair_shape(S, pair);
  // Self conjugacy of the kernel.
  for (std::size_t a = 0; a < S.size(); ++a)
    for (int t : pair.sub.members())
      if (!pair.sub.contains(S.product(S.product(static_cast<int>(a), t), S.inverse(static_cast<int>(a)))))
        return false;
  // The whole semigroup must normalize tau.
  Normalizers n = normalizers(S, pair.tau);
  if (n.both.member.count() != S.size())
    return false;
  // Kernel absorbing condition.
  for (std::size_t x = 0; x < S.size(); ++x) {
    int xi = static_cast<int>(x);
    if (pair.sub.contains(xi))
      continue;
    for (int e : S.idempotents())
      if (pair.sub.contains(S.product(xi, e)) &&
          tau_related_elems(S, pair.tau, e, S.range_idempotent(xi)))
        return false;
  }
  // Kernel balance condition.
  for (int x : pair.sub.members())
    if (!tau_related_elems(S, pair.tau, S.domain_idempotent(x), S.range_idempotent(x)))
      return false;
  return true;
}

EqRelation two_sided_from_pair(const FiniteInverseSemigroup& S, const IKPair& pair) {
  if (!is_congruence_pair(S, pair))
    throw InputError("not a two-sided congruence pair");
  EqRelation rel(S.size());
  for (std::size_t a = 0; a < S.size(); ++a)
    for (std::size_t b = a + 1; b < S.size(); ++b) {
      int ai = static_cast<int>(a), bi = static_cast<int>(b);
      if (tau_related_elems(S, pair.tau, S.range_idempotent(ai), S.range_idempotent(bi)) &&
          pair.sub.contains(S.product(ai, S.inverse(bi))))
        rel.unite(ai, bi);
    }
  return rel;
}

bool is_two_sided(const FiniteInverseSemigroup& S, const EqRelation& rho) {
  return is_left_congruence(S, rho) && is_right_compatible(S, rho);
}

CongruenceLattice build_lattice(const FiniteInverseSemigroup& S) {
  FiniteInverseSemigroup E = idempotent_semilattice(S);
  std::vector<TraceCongruence> traces = semilattice_congruences(E);
  std::vector<FullInverseSub> subs = full_inverse_subsemigroups(S);

  CongruenceLattice lat;
  for (const auto& tau : traces)
    for (const auto& T : subs) {
      IKPair pair{tau, T};
      if (is_inverse_congruence_pair(S, pair))
        lat.nodes.push_back(LatticeNode{pair, congruence_from_pair(S, pair)});
    }
  std::sort(lat.nodes.begin(), lat.nodes.end(), [](const LatticeNode& a, const LatticeNode& b) {
    auto ka = a.pair.tau.canonical();
    auto kb = b.pair.tau.canonical();
    if (ka != kb)
      return ka < kb;
    return a.pair.sub < b.pair.sub;
  });

  const std::size_t n = lat.nodes.size();
  lat.leq.assign(n * n, false);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      bool by_rel = lat.nodes[i].rho.subrelation_of(lat.nodes[j].rho);
      bool by_pair = pair_leq(lat.nodes[i].pair, lat.nodes[j].pair);
      internal_check(by_rel == by_pair, "pair order disagrees with congruence order");
      lat.leq[i * n + j] = by_rel;
    }

  // Cover edges by transitive reduction.
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j || !lat.leq[i * n + j])
        continue;
      bool cover = true;
      for (std::size_t k = 0; k < n && cover; ++k)
        if (k != i && k != j && lat.leq[i * n + k] && lat.leq[k * n + j])
          cover = false;
      if (cover)
        lat.hasse.emplace_back(static_cast<int>(i), static_cast<int>(j));
    }
  return lat;
}

}  // namespace icl
