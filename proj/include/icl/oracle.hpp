#ifndef ICL_ORACLE_HPP
#define ICL_ORACLE_HPP

#include <string>
#include <vector>

#include "icl/eq_relation.hpp"
#include "icl/semigroup.hpp"

namespace icl {

enum class OracleStrategy {
  kPartitions,      // filter all set partitions; requires |S| <= 12
  kPrincipalJoins,  // close principal left congruences under join
};

// All left congruences on S, canonically sorted and duplicate free.
std::vector<EqRelation> brute_force_left_congruences(const FiniteInverseSemigroup& S,
                                                     OracleStrategy strategy);

struct OracleCheck {
  std::string name;
  bool pass = false;
  std::string counterexample;  // empty when pass
};

struct OracleReport {
  std::string semigroup;
  std::size_t size = 0;
  std::size_t congruence_count = 0;
  std::vector<EqRelation> congruences;
  std::vector<OracleCheck> checks;
  // True when every left congruence has kernel equal to inverse kernel
  // (holds on Brandt and Clifford semigroups).  Informational.
  bool kernel_always_inverse = false;

  bool all_pass() const {
    for (const auto& c : checks)
      if (!c.pass)
        return false;
    return true;
  }
};

// Runs the whole structural ledger against the brute-force congruence
// list: pair bijection, round trips, ordering, meet/join, decomposition,
// duality, the two-sided criteria and trace-class counts.  Failures are
// report entries, never exceptions.  Without an explicit strategy the
// partition filter is used whenever it fits.
OracleReport certify(const FiniteInverseSemigroup& S, const std::string& name = "");
OracleReport certify(const FiniteInverseSemigroup& S, const std::string& name,
                     OracleStrategy strategy);

}  // namespace icl

#endif
