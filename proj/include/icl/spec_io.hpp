#ifndef ICL_SPEC_IO_HPP
#define ICL_SPEC_IO_HPP

#include <string>
#include <vector>

#include <json.hpp>

#include "icl/eq_relation.hpp"
#include "icl/oracle.hpp"
#include "icl/pairs.hpp"
#include "icl/semigroup.hpp"

namespace icl {

// A user-supplied semigroup description: a degree and generators given
// as point -> image dictionaries with 1-based points.
struct SemigroupSpec {
  std::size_t degree = 0;
  std::vector<PartialPerm> generators;
};

SemigroupSpec parse_semigroup_spec(const nlohmann::json& j);
SemigroupSpec load_semigroup_spec(const std::string& path);

FiniteInverseSemigroup build_from_spec(const SemigroupSpec& spec, std::size_t cap);

// Partitions are serialized as sorted block lists of element indices.
nlohmann::json relation_to_json(const EqRelation& rel);
EqRelation relation_from_json(const nlohmann::json& j, std::size_t size);

// Trace congruences in I/O use blocks of idempotent element indices.
nlohmann::json trace_to_json(const FiniteInverseSemigroup& S, const TraceCongruence& tau);
TraceCongruence trace_from_json(const FiniteInverseSemigroup& S, const nlohmann::json& j);

nlohmann::json sub_to_json(const FullInverseSub& sub);
FullInverseSub sub_from_json(const FiniteInverseSemigroup& S, const nlohmann::json& j);

nlohmann::json pair_to_json(const FiniteInverseSemigroup& S, const IKPair& pair);
IKPair pair_from_json(const FiniteInverseSemigroup& S, const nlohmann::json& j);

nlohmann::json elements_to_json(const FiniteInverseSemigroup& S);

nlohmann::json lattice_to_json(const FiniteInverseSemigroup& S, const CongruenceLattice& lat);
std::string lattice_to_dot(const FiniteInverseSemigroup& S, const CongruenceLattice& lat);

nlohmann::json report_to_json(const OracleReport& rep);

}  // namespace icl

#endif
