#include "icl/spec_io.hpp"

#include <fstream>
#include <sstream>

#include "icl/errors.hpp"
#include "icl/trace_kernel.hpp"

namespace icl {

using nlohmann::json;

SemigroupSpec parse_semigroup_spec(const json& j) {
  SemigroupSpec spec;
  if (!j.is_object() || !j.contains("degree") || !j.contains("generators"))
    throw InputError("spec needs 'degree' and 'generators'");
  if (!j["degree"].is_number_unsigned() || j["degree"].get<std::size_t>() == 0)
    throw InputError("'degree' must be a positive integer");
  spec.degree = j["degree"].get<std::size_t>();
  if (!j["generators"].is_array() || j["generators"].empty())
    throw InputError("'generators' must be a nonempty array");
  for (const auto& g : j["generators"]) {
    if (!g.is_object())
      throw InputError("each generator is a point->image object");
    std::vector<int> img(spec.degree, PartialPerm::kUndef);
    for (const auto& [key, val] : g.items()) {
      int point;
      try {
        point = std::stoi(key);
      } catch (const std::exception&) {
        throw InputError("generator key '" + key + "' is not a point");
      }
      if (point < 1 || point > static_cast<int>(spec.degree))
        throw InputError("point out of range in generator");
      if (!val.is_number_integer())
        throw InputError("generator image must be an integer");
      int image = val.get<int>();
      if (image < 1 || image > static_cast<int>(spec.degree))
        throw InputError("image out of range in generator");
      img[point - 1] = image - 1;
    }
    spec.generators.emplace_back(std::move(img));
  }
  return spec;
}

SemigroupSpec load_semigroup_spec(const std::string& path) {
  std::ifstream in(path);
  if (!in)
    throw InputError("cannot open '" + path + "'");
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw InputError(std::string("bad JSON: ") + e.what());
  }
  return parse_semigroup_spec(j);
}

FiniteInverseSemigroup build_from_spec(const SemigroupSpec& spec, std::size_t cap) {
  return FiniteInverseSemigroup::closure(spec.generators, cap);
}

json relation_to_json(const EqRelation& rel) {
  json out = json::array();
  for (const auto& blk : rel.blocks())
    out.push_back(blk);
  return out;
}

EqRelation relation_from_json(const json& j, std::size_t size) {
  if (!j.is_array())
    throw InputError("partition must be an array of blocks");
  EqRelation rel(size);
  std::vector<bool> seen(size, false);
  for (const auto& blk : j) {
    if (!blk.is_array() || blk.empty())
      throw InputError("each block must be a nonempty array");
    int first = -1;
    for (const auto& v : blk) {
      if (!v.is_number_integer())
        throw InputError("block entries must be element indices");
      int x = v.get<int>();
      if (x < 0 || x >= static_cast<int>(size))
        throw InputError("element index out of range in partition");
      if (seen[x])
        throw InputError("element repeated across blocks");
      seen[x] = true;
      if (first == -1)
        first = x;
      else
        rel.unite(first, x);
    }
  }
  return rel;  // unlisted elements stay singletons
}

json trace_to_json(const FiniteInverseSemigroup& S, const TraceCongruence& tau) {
  json out = json::array();
  for (const auto& blk : tau.blocks()) {
    json jblk = json::array();
    for (int pos : blk)
      jblk.push_back(S.idempotents()[pos]);
    out.push_back(jblk);
  }
  return out;
}

TraceCongruence trace_from_json(const FiniteInverseSemigroup& S, const json& j) {
  if (!j.is_array())
    throw InputError("trace partition must be an array of blocks");
  TraceCongruence tau(S.num_idempotents());
  std::vector<bool> seen(S.num_idempotents(), false);
  for (const auto& blk : j) {
    if (!blk.is_array() || blk.empty())
      throw InputError("each trace block must be a nonempty array");
    int first = -1;
    for (const auto& v : blk) {
      if (!v.is_number_integer())
        throw InputError("trace block entries must be element indices");
      int x = v.get<int>();
      if (x < 0 || x >= static_cast<int>(S.size()) || !S.is_idempotent(x))
        throw InputError("trace blocks must contain idempotent element indices");
      int pos = S.idempotent_position(x);
      if (seen[pos])
        throw InputError("idempotent repeated across trace blocks");
      seen[pos] = true;
      if (first == -1)
        first = pos;
      else
        tau.unite(first, pos);
    }
  }
  if (!is_trace_congruence(S, tau))
    throw InputError("partition of the idempotents is not a congruence");
  return tau;
}

json sub_to_json(const FullInverseSub& sub) {
  return json(sub.members());
}

FullInverseSub sub_from_json(const FiniteInverseSemigroup& S, const json& j) {
  if (!j.is_array())
    throw InputError("subsemigroup must be an array of element indices");
  Bitset mem(S.size());
  for (const auto& v : j) {
    if (!v.is_number_integer())
      throw InputError("subsemigroup entries must be element indices");
    int x = v.get<int>();
    if (x < 0 || x >= static_cast<int>(S.size()))
      throw InputError("element index out of range in subsemigroup");
    mem.set(static_cast<std::size_t>(x));
  }
  if (!is_full_inverse_sub(S, mem))
    throw InputError("subset is not a full inverse subsemigroup");
  return FullInverseSub{mem};
}

json pair_to_json(const FiniteInverseSemigroup& S, const IKPair& pair) {
  return json{{"tau", trace_to_json(S, pair.tau)}, {"sub", sub_to_json(pair.sub)}};
}

IKPair pair_from_json(const FiniteInverseSemigroup& S, const json& j) {
  if (!j.is_object() || !j.contains("tau") || !j.contains("sub"))
    throw InputError("pair needs 'tau' and 'sub'");
  return IKPair{trace_from_json(S, j["tau"]), sub_from_json(S, j["sub"])};
}

json elements_to_json(const FiniteInverseSemigroup& S) {
  json out = json::array();
  for (std::size_t i = 0; i < S.size(); ++i) {
    json e;
    e["index"] = i;
    if (S.has_elements()) {
      json img = json::array();
      for (std::size_t p = 0; p < S.element(static_cast<int>(i)).degree(); ++p) {
        int v = S.element(static_cast<int>(i))[p];
        if (v == PartialPerm::kUndef)
          img.push_back(nullptr);
        else
          img.push_back(v + 1);
      }
      e["image"] = img;
    }
    e["idempotent"] = S.is_idempotent(static_cast<int>(i));
    out.push_back(e);
  }
  return out;
}

json lattice_to_json(const FiniteInverseSemigroup& S, const CongruenceLattice& lat) {
  json nodes = json::array();
  for (std::size_t i = 0; i < lat.nodes.size(); ++i) {
    json n;
    n["index"] = i;
    n["tau"] = trace_to_json(S, lat.nodes[i].pair.tau);
    n["sub"] = sub_to_json(lat.nodes[i].pair.sub);
    n["relation"] = relation_to_json(lat.nodes[i].rho);
    nodes.push_back(n);
  }
  json hasse = json::array();
  for (auto [lo, hi] : lat.hasse)
    hasse.push_back(json::array({lo, hi}));
  return json{{"count", lat.nodes.size()},
              {"elements", elements_to_json(S)},
              {"nodes", nodes},
              {"hasse", hasse}};
}

namespace {

std::string blocks_label(const json& blocks) {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    if (i)
      os << ',';
    os << '{';
    for (std::size_t k = 0; k < blocks[i].size(); ++k) {
      if (k)
        os << ',';
      os << blocks[i][k].get<int>();
    }
    os << '}';
  }
  os << '}';
  return os.str();
}

}  // namespace

std::string lattice_to_dot(const FiniteInverseSemigroup& S, const CongruenceLattice& lat) {
  std::ostringstream os;
  os << "graph congruence_lattice {\n";
  for (std::size_t i = 0; i < lat.nodes.size(); ++i) {
    os << "  n" << i << " [label=\"tau:" << blocks_label(trace_to_json(S, lat.nodes[i].pair.tau))
       << " | T:{";
    auto mem = lat.nodes[i].pair.sub.members();
    for (std::size_t k = 0; k < mem.size(); ++k) {
      if (k)
        os << ',';
      os << mem[k];
    }
    os << "}\"];\n";
  }
  for (auto [lo, hi] : lat.hasse)
    os << "  n" << lo << " -- n" << hi << ";\n";
  os << "}\n";
  return os.str();
}

json report_to_json(const OracleReport& rep) {
  json checks = json::array();
  for (const auto& c : rep.checks) {
    json jc{{"name", c.name}, {"pass", c.pass}};
    if (!c.pass)
      jc["counterexample"] = c.counterexample;
    checks.push_back(jc);
  }
  json congs = json::array();
  for (const auto& r : rep.congruences)
    congs.push_back(relation_to_json(r));
  std::size_t failures = 0;
  for (const auto& c : rep.checks)
    if (!c.pass)
      ++failures;
  return json{{"semigroup", rep.semigroup},
              {"size", rep.size},
              {"count", rep.congruence_count},
              {"congruences", congs},
              {"checks", checks},
              {"failures", failures},
              {"kernel_always_inverse", rep.kernel_always_inverse}};
}

}  // namespace icl
