#include <cstdlib>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "icl/bicyclic.hpp"
#include "icl/corpus.hpp"
#include "icl/errors.hpp"
#include "icl/oracle.hpp"
#include "icl/pairs.hpp"
#include "icl/spec_io.hpp"
#include "icl/trace_kernel.hpp"

namespace {

using nlohmann::json;

std::size_t element_cap() {
  if (const char* env = std::getenv("ICL_MAX_ELEMENTS")) {
    char* end = nullptr;
    unsigned long v = std::strtoul(env, &end, 10);
    if (end && *end == '\0' && v > 0)
      return static_cast<std::size_t>(v);
  }
  return icl::kDefaultElementCap;
}

icl::FiniteInverseSemigroup load(const std::string& path) {
  return icl::build_from_spec(icl::load_semigroup_spec(path), element_cap());
}

json parse_json_arg(const std::string& text, const char* what) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw icl::InputError(std::string("bad JSON for ") + what + ": " + e.what());
  }
}

int run(int argc, char** argv) {
  CLI::App app{"left congruence lattices of finite inverse semigroups"};
  app.require_subcommand(1);

  std::string spec_path, format = "json", tau_text, sub_text, p1_text, p2_text, rho_text;
  std::string strategy = "partitions", trace_text, bsub_text;
  bool cross_check = false;

  auto* lattice = app.add_subcommand("lattice", "full left congruence lattice");
  lattice->add_option("spec", spec_path, "semigroup spec JSON file")->required();
  lattice->add_option("--format", format, "dot or json")->check(CLI::IsMember({"dot", "json"}));

  auto* pairs = app.add_subcommand("pairs", "all valid trace / inverse kernel pairs");
  pairs->add_option("spec", spec_path)->required();

  auto* check_pair = app.add_subcommand("check-pair", "validate a candidate pair");
  check_pair->add_option("spec", spec_path)->required();
  check_pair->add_option("--tau", tau_text, "partition of the idempotents, JSON blocks")
      ->required();
  check_pair->add_option("--sub", sub_text, "element indices of the subsemigroup, JSON array")
      ->required();

  auto* join = app.add_subcommand("join", "join of two pairs");
  join->add_option("spec", spec_path)->required();
  join->add_option("--p1", p1_text, R"({"tau": blocks, "sub": [indices]})")->required();
  join->add_option("--p2", p2_text)->required();
  join->add_flag("--check", cross_check, "cross-check against the relation join");

  auto* meet = app.add_subcommand("meet", "meet of two pairs");
  meet->add_option("spec", spec_path)->required();
  meet->add_option("--p1", p1_text)->required();
  meet->add_option("--p2", p2_text)->required();
  meet->add_flag("--check", cross_check, "cross-check against the relation meet");

  auto* oracle = app.add_subcommand("oracle", "brute-force certification report");
  oracle->add_option("spec", spec_path)->required();
  oracle->add_option("--strategy", strategy)
      ->check(CLI::IsMember({"partitions", "principal-joins"}));

  auto* decomp = app.add_subcommand("decompose", "trace-minimal and idempotent separating parts");
  decomp->add_option("spec", spec_path)->required();
  decomp->add_option("--rho", rho_text, "partition of the elements, JSON blocks")->required();

  auto* bicyclic = app.add_subcommand("bicyclic", "bicyclic monoid computations");
  auto* bcheck = bicyclic->add_subcommand("check", "validate a symbolic pair");
  bcheck->add_option("--trace", trace_text, "prefix=[...];tail=inf|per([...])")->required();
  bcheck->add_option("--sub", bsub_text, "k=K,d=D or E")->required();

  CLI11_PARSE(app, argc, argv);

  if (*lattice) {
    auto S = load(spec_path);
    auto lat = icl::build_lattice(S);
    if (format == "dot")
      std::cout << icl::lattice_to_dot(S, lat);
    else
      std::cout << icl::lattice_to_json(S, lat).dump(2) << '\n';
  } else if (*pairs) {
    auto S = load(spec_path);
    auto lat = icl::build_lattice(S);
    json out = json::array();
    for (const auto& node : lat.nodes)
      out.push_back(icl::pair_to_json(S, node.pair));
    std::cout << json{{"count", lat.nodes.size()},
                      {"elements", icl::elements_to_json(S)},
                      {"pairs", out}}
                     .dump(2)
              << '\n';
  } else if (*check_pair) {
    auto S = load(spec_path);
    icl::IKPair pair{icl::trace_from_json(S, parse_json_arg(tau_text, "--tau")),
                     icl::sub_from_json(S, parse_json_arg(sub_text, "--sub"))};
    bool valid = icl::is_inverse_congruence_pair(S, pair);
    json out{{"valid", valid}};
    icl::Normalizers n = icl::normalizers(S, pair.tau);
    if (pair.sub.member.subset_of(n.both.member))
      out["valid_via_minimals"] = icl::is_icp_via_minimals(S, pair);
    if (valid) {
      auto rho = icl::congruence_from_pair(S, pair);
      out["relation"] = icl::relation_to_json(rho);
      out["two_sided"] = icl::is_two_sided(S, rho);
    }
    std::cout << out.dump(2) << '\n';
  } else if (*join || *meet) {
    auto S = load(spec_path);
    icl::IKPair p1 = icl::pair_from_json(S, parse_json_arg(p1_text, "--p1"));
    icl::IKPair p2 = icl::pair_from_json(S, parse_json_arg(p2_text, "--p2"));
    icl::IKPair result = *join ? icl::join_pairs(S, p1, p2) : icl::meet_pairs(S, p1, p2);
    auto rho = icl::congruence_from_pair(S, result);
    json out{{"pair", icl::pair_to_json(S, result)}, {"relation", icl::relation_to_json(rho)}};
    if (cross_check) {
      auto r1 = icl::congruence_from_pair(S, p1);
      auto r2 = icl::congruence_from_pair(S, p2);
      auto direct = *join ? icl::eq_join_transitive(r1, r2) : icl::eq_meet(r1, r2);
      icl::internal_check(direct == rho, "pair arithmetic disagrees with relation arithmetic");
      out["cross_check"] = "ok";
    }
    std::cout << out.dump(2) << '\n';
  } else if (*oracle) {
    auto S = load(spec_path);
    auto st = strategy == "principal-joins" ? icl::OracleStrategy::kPrincipalJoins
                                            : icl::OracleStrategy::kPartitions;
    auto rep = icl::certify(S, spec_path, st);
    std::cout << icl::report_to_json(rep).dump(2) << '\n';
  } else if (*decomp) {
    auto S = load(spec_path);
    auto rho = icl::relation_from_json(parse_json_arg(rho_text, "--rho"), S.size());
    if (!icl::is_left_congruence(S, rho))
      throw icl::InputError("partition is not a left congruence");
    auto d = icl::decompose(S, rho);
    json witnesses = json::array();
    for (auto [a, f] : d.kernel_witnesses)
      witnesses.push_back(json{{"a", a}, {"f", f}});
    std::cout << json{{"trace_part", icl::relation_to_json(d.trace_part)},
                      {"idsep_part", icl::relation_to_json(d.idsep_part)},
                      {"witnesses", witnesses}}
                     .dump(2)
              << '\n';
  } else if (*bcheck) {
    auto trace = icl::bicyclic::parse_trace(trace_text);
    auto sub = icl::bicyclic::parse_sub(bsub_text);
    json out{{"valid", icl::bicyclic::is_valid_pair(trace, sub)},
             {"trace", trace.to_string()},
             {"sub", sub.to_string()},
             {"normalizer", trace.normalizer().to_string()}};
    if (trace.tail() == icl::bicyclic::TailKind::kPeriodic) {
      out["threshold"] = trace.shift_threshold();
      out["period"] = trace.period();
    }
    std::cout << out.dump(2) << '\n';
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const icl::ResourceError& e) {
    std::cerr << "resource limit: " << e.what() << '\n';
    return 2;
  } catch (const icl::InternalError& e) {
    std::cerr << "internal invariant violation: " << e.what() << '\n';
    return 3;
  } catch (const icl::InputError& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return 1;
  }
}
