#include "icl/oracle.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "icl/errors.hpp"
#include "icl/pairs.hpp"
#include "icl/trace_kernel.hpp"

namespace icl {

namespace {

void enumerate_filtered(const FiniteInverseSemigroup& S, std::vector<int>& label, std::size_t pos,
                        int next, std::vector<EqRelation>& out) {
  const std::size_t n = S.size();
  if (pos == n) {
    EqRelation r(n);
    std::vector<int> rep(n, -1);
    for (std::size_t i = 0; i < n; ++i) {
      if (rep[label[i]] == -1)
        rep[label[i]] = static_cast<int>(i);
      else
        r.unite(rep[label[i]], static_cast<int>(i));
    }
    if (is_left_congruence(S, r))
      out.push_back(std::move(r));
    return;
  }
  for (int c = 0; c <= next && c < static_cast<int>(n); ++c) {
    label[pos] = c;
    enumerate_filtered(S, label, pos + 1, std::max(next, c + 1), out);
  }
}

std::string blocks_string(const EqRelation& rel) {
  std::ostringstream os;
  os << '{';
  bool first_blk = true;
  for (const auto& blk : rel.blocks()) {
    if (!first_blk)
      os << ',';
    first_blk = false;
    os << '{';
    for (std::size_t i = 0; i < blk.size(); ++i) {
      if (i)
        os << ',';
      os << blk[i];
    }
    os << '}';
  }
  os << '}';
  return os.str();
}

}  // namespace

std::vector<EqRelation> brute_force_left_congruences(const FiniteInverseSemigroup& S,
                                                     OracleStrategy strategy) {
  std::vector<EqRelation> out;
  if (strategy == OracleStrategy::kPartitions) {
    if (S.size() > 12)
      throw ResourceError("partition strategy bounded at 12 elements");
    std::vector<int> label(S.size(), 0);
    enumerate_filtered(S, label, 0, 0, out);
  } else {
    std::set<std::vector<int>> seen;
    std::vector<EqRelation> pool;
    EqRelation id(S.size());
    seen.insert(id.canonical());
    pool.push_back(id);
    for (std::size_t a = 0; a < S.size(); ++a)
      for (std::size_t b = a + 1; b < S.size(); ++b) {
        GenPairSet g;
        g.add(static_cast<int>(a), static_cast<int>(b));
        EqRelation r = left_congruence_closure(S, g);
        if (seen.insert(r.canonical()).second)
          pool.push_back(std::move(r));
      }
    for (std::size_t i = 0; i < pool.size(); ++i)
      for (std::size_t j = 0; j < i; ++j) {
        EqRelation r = eq_join_transitive(pool[i], pool[j]);
        if (seen.insert(r.canonical()).second)
          pool.push_back(std::move(r));
      }
    out = std::move(pool);
  }
  std::sort(out.begin(), out.end(),
            [](const EqRelation& a, const EqRelation& b) { return a.canonical() < b.canonical(); });
  return out;
}

OracleReport certify(const FiniteInverseSemigroup& S, const std::string& name) {
  return certify(S, name,
                 S.size() <= 12 ? OracleStrategy::kPartitions : OracleStrategy::kPrincipalJoins);
}

OracleReport certify(const FiniteInverseSemigroup& S, const std::string& name,
                     OracleStrategy strategy) {
  OracleReport rep;
  rep.semigroup = name;
  rep.size = S.size();

  rep.congruences = brute_force_left_congruences(S, strategy);
  rep.congruence_count = rep.congruences.size();

  auto check = [&](const std::string& check_name, bool pass, const std::string& cx) {
    rep.checks.push_back(OracleCheck{check_name, pass, pass ? "" : cx});
  };

  // Strategy agreement.
  if (S.size() <= 12) {
    auto other = brute_force_left_congruences(S, strategy == OracleStrategy::kPartitions
                                                     ? OracleStrategy::kPrincipalJoins
                                                     : OracleStrategy::kPartitions);
    bool same = other.size() == rep.congruences.size();
    for (std::size_t i = 0; same && i < other.size(); ++i)
      same = other[i] == rep.congruences[i];
    check("strategy_agreement", same, "partition and principal-join lists differ");
  }

  // Bijection with valid pairs.
  {
    CongruenceLattice lat = build_lattice(S);
    std::set<std::vector<int>> from_pairs, brute;
    for (const auto& node : lat.nodes)
      from_pairs.insert(node.rho.canonical());
    for (const auto& r : rep.congruences)
      brute.insert(r.canonical());
    check("pair_bijection", from_pairs == brute,
          "congruences from valid pairs differ from brute force list");

    // Ordering agreement is asserted inside build_lattice; record the
    // containment equivalence against kernels and traces here.
    bool order_ok = true;
    std::string cx;
    for (const auto& r1 : rep.congruences) {
      for (const auto& r2 : rep.congruences) {
        bool direct = r1.subrelation_of(r2);
        bool via_tk = trace_of(S, r1).subrelation_of(trace_of(S, r2)) &&
                      kernel_of(S, r1).member.subset_of(kernel_of(S, r2).member);
        bool via_ik = trace_of(S, r1).subrelation_of(trace_of(S, r2)) &&
                      inverse_kernel_of(S, r1).member.subset_of(inverse_kernel_of(S, r2).member);
        if (direct != via_tk || direct != via_ik) {
          order_ok = false;
          cx = blocks_string(r1) + " vs " + blocks_string(r2);
          break;
        }
      }
      if (!order_ok)
        break;
    }
    check("ordering", order_ok, cx);

    // Meet and join computed on pairs match the relation-level results.
    bool mj_ok = true;
    std::string mj_cx;
    for (const auto& n1 : lat.nodes) {
      for (const auto& n2 : lat.nodes) {
        IKPair m = meet_pairs(S, n1.pair, n2.pair);
        if (congruence_from_pair(S, m) != eq_meet(n1.rho, n2.rho)) {
          mj_ok = false;
          mj_cx = "meet mismatch at " + blocks_string(n1.rho) + ", " + blocks_string(n2.rho);
          break;
        }
        IKPair j = join_pairs(S, n1.pair, n2.pair);
        if (congruence_from_pair(S, j) != eq_join_transitive(n1.rho, n2.rho)) {
          mj_ok = false;
          mj_cx = "join mismatch at " + blocks_string(n1.rho) + ", " + blocks_string(n2.rho);
          break;
        }
      }
      if (!mj_ok)
        break;
    }
    check("meet_join", mj_ok, mj_cx);
  }

  // Round trips.
  {
    bool ok = true;
    std::string cx;
    for (const auto& rho : rep.congruences) {
      IKPair p = pair_from_congruence(S, rho);
      if (!is_inverse_congruence_pair(S, p) || congruence_from_pair(S, p) != rho) {
        ok = false;
        cx = blocks_string(rho);
        break;
      }
      IKPair back = pair_from_congruence(S, congruence_from_pair(S, p));
      if (!(back == p)) {
        ok = false;
        cx = blocks_string(rho);
        break;
      }
    }
    check("round_trip", ok, cx);
  }

  // Decomposition into trace-minimal and idempotent separating parts.
  {
    bool ok = true;
    std::string cx;
    for (const auto& rho : rep.congruences) {
      Decomposition d = decompose(S, rho);
      if (eq_join_transitive(d.trace_part, d.idsep_part) != rho) {
        ok = false;
        cx = "join of parts differs at " + blocks_string(rho);
        break;
      }
      for (auto [a, f] : d.kernel_witnesses) {
        int fa = S.product(f, a);
        if (!d.idsep_part.related(f, fa) || !d.trace_part.related(fa, a)) {
          ok = false;
          cx = "bad witness at element " + std::to_string(a);
          break;
        }
      }
      if (!ok)
        break;
    }
    check("decomposition", ok, cx);
  }

  // Reversal duality: same trace and inverse kernel, right compatible.
  {
    bool ok = true;
    std::string cx;
    for (const auto& rho : rep.congruences) {
      EqRelation rev = reversed_congruence(S, rho);
      bool right_cong = is_right_compatible(S, rev);
      // Inverse kernel of a right congruence: a related to a^-1 a.
      Bitset ik(S.size());
      for (std::size_t a = 0; a < S.size(); ++a)
        if (rev.related(static_cast<int>(a), S.range_idempotent(static_cast<int>(a))))
          ik.set(a);
      bool same = trace_of(S, rev) == trace_of(S, rho) &&
                  ik == inverse_kernel_of(S, rho).member;
      if (!right_cong || !same) {
        ok = false;
        cx = blocks_string(rho);
        break;
      }
    }
    check("duality", ok, cx);
  }

  // Two-sided criteria: direct right-compatibility, the congruence-pair
  // predicate, and equality of the left/right relations all agree; the
  // two-sided formula reproduces the congruence.
  {
    bool ok = true;
    std::string cx;
    for (const auto& rho : rep.congruences) {
      IKPair p = coordinates_of(S, rho);
      bool direct = is_two_sided(S, rho);
      bool via_pair = is_congruence_pair(S, p);
      EqRelation right = reversed_congruence(S, congruence_from_pair(S, p));
      bool via_lr = right == rho;
      if (direct != via_pair || direct != via_lr) {
        ok = false;
        cx = blocks_string(rho);
        break;
      }
      if (direct) {
        if (two_sided_from_pair(S, p) != rho ||
            !(kernel_of(S, rho).member == inverse_kernel_of(S, rho).member)) {
          ok = false;
          cx = blocks_string(rho);
          break;
        }
      }
    }
    check("two_sided", ok, cx);
  }

  // Trace class sizes against the quotient count, and their extremes.
  {
    bool ok = true;
    std::string cx;
    FiniteInverseSemigroup E = idempotent_semilattice(S);
    for (const auto& tau : semilattice_congruences(E)) {
      std::vector<IKPair> cls = trace_class(S, tau);  // asserts the quotient count
      std::size_t with_trace = 0;
      for (const auto& rho : rep.congruences)
        if (trace_of(S, rho) == tau)
          ++with_trace;
      if (with_trace != cls.size()) {
        ok = false;
        cx = "trace class count mismatch";
        break;
      }
      FullInverseSub lo = centralizer(S, tau);
      FullInverseSub hi = normalizers(S, tau).both;
      EqRelation min_rho = congruence_from_pair(S, IKPair{tau, lo});
      EqRelation max_rho = congruence_from_pair(S, IKPair{tau, hi});
      for (const auto& q : cls) {
        EqRelation rho = congruence_from_pair(S, q);
        if (!min_rho.subrelation_of(rho) || !rho.subrelation_of(max_rho)) {
          ok = false;
          cx = "class extremes are not extreme";
          break;
        }
      }
      if (!ok)
        break;
    }
    check("trace_class_counts", ok, cx);
  }

  rep.kernel_always_inverse = true;
  for (const auto& rho : rep.congruences)
    if (!(kernel_of(S, rho).member == inverse_kernel_of(S, rho).member)) {
      rep.kernel_always_inverse = false;
      break;
    }

  return rep;
}

}  // namespace icl
