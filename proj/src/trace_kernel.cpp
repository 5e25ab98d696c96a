#include "icl/trace_kernel.hpp"

#include "icl/errors.hpp"

namespace icl {

TraceCongruence trace_of(const FiniteInverseSemigroup& S, const EqRelation& rho) {
  return restrict_relation(rho, S.idempotents()).rel;
}

KernelSub kernel_of(const FiniteInverseSemigroup& S, const EqRelation& rho) {
  Bitset mem(S.size());
  for (std::size_t a = 0; a < S.size(); ++a)
    for (int e : S.idempotents())
      if (rho.related(static_cast<int>(a), e)) {
        mem.set(a);
        break;
      }
  return KernelSub{mem};
}

FullInverseSub inverse_kernel_of(const FiniteInverseSemigroup& S, const EqRelation& rho) {
  Bitset mem(S.size());
  for (std::size_t a = 0; a < S.size(); ++a)
    if (rho.related(static_cast<int>(a), S.domain_idempotent(static_cast<int>(a))))
      mem.set(a);
  return FullInverseSub{mem};
}

namespace {

// All (e, f) pairs related under tau, as S-element indices.
std::vector<std::pair<int, int>> related_idempotent_pairs(const FiniteInverseSemigroup& S,
                                                          const TraceCongruence& tau) {
  const auto& idem = S.idempotents();
  std::vector<std::pair<int, int>> out;
  for (std::size_t i = 0; i < idem.size(); ++i)
    for (std::size_t j = i + 1; j < idem.size(); ++j)
      if (tau.related(static_cast<int>(i), static_cast<int>(j)))
        out.emplace_back(idem[i], idem[j]);
  return out;
}

bool tau_related_elems(const FiniteInverseSemigroup& S, const TraceCongruence& tau, int e, int f) {
  int pe = S.idempotent_position(e);
  int pf = S.idempotent_position(f);
  internal_check(pe >= 0 && pf >= 0, "trace lookup on non-idempotent");
  return tau.related(pe, pf);
}

}  // namespace

Normalizers normalizers(const FiniteInverseSemigroup& S, const TraceCongruence& tau) {
  internal_check(tau.size() == S.num_idempotents(), "trace congruence size mismatch");
  auto rel_pairs = related_idempotent_pairs(S, tau);
  Normalizers out{Bitset(S.size()), Bitset(S.size()), FullInverseSub{Bitset(S.size())}};
  for (std::size_t a = 0; a < S.size(); ++a) {
    int ai = static_cast<int>(a);
    bool left = true, right = true;
    for (auto [e, f] : rel_pairs) {
      if (left && !tau_related_elems(S, tau, S.conj_down(ai, e), S.conj_down(ai, f)))
        left = false;
      if (right && !tau_related_elems(S, tau, S.conj_up(ai, e), S.conj_up(ai, f)))
        right = false;
      if (!left && !right)
        break;
    }
    if (left)
      out.left.set(a);
    if (right)
      out.right.set(a);
    if (left && right)
      out.both.member.set(a);
  }
  return out;
}

FullInverseSub centralizer(const FiniteInverseSemigroup& S, const TraceCongruence& tau) {
  Normalizers n = normalizers(S, tau);
  Bitset mem(S.size());
  for (int a : n.both.member.members()) {
    int aia = S.range_idempotent(a);
    for (int e : S.idempotents()) {
      if (!tau_related_elems(S, tau, e, aia))
        continue;
      if (S.product(a, e) == e) {
        mem.set(static_cast<std::size_t>(a));
        break;
      }
    }
  }
  return FullInverseSub{mem};
}

EqRelation trace_minimum(const FiniteInverseSemigroup& S, const TraceCongruence& tau) {
  EqRelation rel(S.size());
  for (std::size_t a = 0; a < S.size(); ++a) {
    for (std::size_t b = a + 1; b < S.size(); ++b) {
      int ai = static_cast<int>(a), bi = static_cast<int>(b);
      if (!tau_related_elems(S, tau, S.range_idempotent(ai), S.range_idempotent(bi)))
        continue;
      // Witness search over the whole tau-class of a^-1 a.
      for (int e : S.idempotents()) {
        if (!tau_related_elems(S, tau, e, S.range_idempotent(ai)))
          continue;
        if (S.product(ai, e) == S.product(bi, e)) {
          rel.unite(ai, bi);
          break;
        }
      }
    }
  }
  return rel;
}

EqRelation trace_maximum(const FiniteInverseSemigroup& S, const TraceCongruence& tau) {
  Normalizers n = normalizers(S, tau);
  EqRelation rel(S.size());
  for (std::size_t a = 0; a < S.size(); ++a) {
    for (std::size_t b = a + 1; b < S.size(); ++b) {
      int ai = static_cast<int>(a), bi = static_cast<int>(b);
      int ab = S.product(S.inverse(ai), bi);
      int ba = S.product(S.inverse(bi), ai);
      if (!n.left.test(static_cast<std::size_t>(ab)) || !n.left.test(static_cast<std::size_t>(ba)))
        continue;
      int lhs = S.product(S.product(S.inverse(ai), S.domain_idempotent(bi)), ai);
      int rhs = S.product(S.product(S.inverse(bi), S.domain_idempotent(ai)), bi);
      if (tau_related_elems(S, tau, lhs, S.range_idempotent(ai)) &&
          tau_related_elems(S, tau, rhs, S.range_idempotent(bi)))
        rel.unite(ai, bi);
    }
  }
  return rel;
}

EqRelation idempotent_separating(const FiniteInverseSemigroup& S, const FullInverseSub& T) {
  if (!is_full_inverse_sub(S, T.member))
    throw InputError("subset is not a full inverse subsemigroup");
  EqRelation rel(S.size());
  for (std::size_t a = 0; a < S.size(); ++a) {
    for (std::size_t b = a + 1; b < S.size(); ++b) {
      int ai = static_cast<int>(a), bi = static_cast<int>(b);
      if (!T.contains(S.product(S.inverse(ai), bi)))
        continue;
      int lhs = S.product(S.product(S.inverse(ai), S.domain_idempotent(bi)), ai);
      int rhs = S.product(S.product(S.inverse(bi), S.domain_idempotent(ai)), bi);
      if (lhs == S.range_idempotent(ai) && rhs == S.range_idempotent(bi))
        rel.unite(ai, bi);
    }
  }
  return rel;
}

EqRelation green_r_relation(const FiniteInverseSemigroup& S) {
  EqRelation rel(S.size());
  std::vector<int> first(S.size(), -1);
  for (std::size_t a = 0; a < S.size(); ++a) {
    int e = S.domain_idempotent(static_cast<int>(a));
    if (first[e] == -1)
      first[e] = static_cast<int>(a);
    else
      rel.unite(first[e], static_cast<int>(a));
  }
  return rel;
}

EqRelation reversed_congruence(const FiniteInverseSemigroup& S, const EqRelation& rho) {
  EqRelation rel(S.size());
  for (std::size_t a = 0; a < S.size(); ++a)
    for (std::size_t b = a + 1; b < S.size(); ++b)
      if (rho.related(static_cast<int>(a), static_cast<int>(b)))
        rel.unite(S.inverse(static_cast<int>(a)), S.inverse(static_cast<int>(b)));
  return rel;
}

bool is_trace_congruence(const FiniteInverseSemigroup& S, const TraceCongruence& tau) {
  if (tau.size() != S.num_idempotents())
    return false;
  const auto& idem = S.idempotents();
  for (std::size_t i = 0; i < idem.size(); ++i)
    for (std::size_t j = i + 1; j < idem.size(); ++j) {
      if (!tau.related(static_cast<int>(i), static_cast<int>(j)))
        continue;
      for (int g : idem) {
        int gi = S.idempotent_position(S.product(g, idem[i]));
        int gj = S.idempotent_position(S.product(g, idem[j]));
        if (!tau.related(gi, gj))
          return false;
      }
    }
  return true;
}

}  // namespace icl
