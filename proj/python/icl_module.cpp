#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "icl/bicyclic.hpp"
#include "icl/corpus.hpp"
#include "icl/errors.hpp"
#include "icl/oracle.hpp"
#include "icl/pairs.hpp"
#include "icl/semigroup.hpp"
#include "icl/trace_kernel.hpp"

namespace py = pybind11;
using namespace icl;

namespace {

PartialPerm perm_from_images(const std::vector<std::optional<int>>& images) {
  std::vector<int> img;
  img.reserve(images.size());
  for (const auto& v : images) {
    if (!v) {
      img.push_back(PartialPerm::kUndef);
    } else {
      if (*v < 1 || *v > static_cast<int>(images.size()))
        throw InputError("image out of range (points are 1-based)");
      img.push_back(*v - 1);
    }
  }
  return PartialPerm(std::move(img));
}

std::vector<std::vector<int>> relation_blocks(const EqRelation& rel) {
  return rel.blocks();
}

}  // namespace

PYBIND11_MODULE(_icl, m) {
  m.doc() = "left congruence lattices of finite inverse semigroups";

  py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
  py::register_exception<ResourceError>(m, "ResourceError", PyExc_RuntimeError);

  py::class_<PartialPerm>(m, "PartialPerm")
      .def(py::init(&perm_from_images), py::arg("images"),
           "images[i] is the 1-based image of point i+1, or None")
      .def_static("identity", [](std::size_t n) { return PartialPerm::identity(n); })
      .def("__mul__", &PartialPerm::operator*)
      .def("inverse", &PartialPerm::inverse)
      .def("degree", &PartialPerm::degree)
      .def("rank", &PartialPerm::rank)
      .def("is_idempotent", &PartialPerm::is_idempotent)
      .def("__eq__", &PartialPerm::operator==)
      .def("__repr__", [](const PartialPerm& p) { return "PartialPerm(" + p.to_string() + ")"; });

  py::class_<FiniteInverseSemigroup>(m, "InverseSemigroup")
      .def_static(
          "closure",
          [](const std::vector<PartialPerm>& gens, std::size_t cap) {
            return FiniteInverseSemigroup::closure(gens, cap);
          },
          py::arg("generators"), py::arg("cap") = kDefaultElementCap)
      .def("size", &FiniteInverseSemigroup::size)
      .def("product", &FiniteInverseSemigroup::product)
      .def("inverse", &FiniteInverseSemigroup::inverse)
      .def("idempotents", &FiniteInverseSemigroup::idempotents)
      .def("natural_leq", &FiniteInverseSemigroup::natural_leq)
      .def("green_r", &FiniteInverseSemigroup::green_r)
      .def("element_strings", [](const FiniteInverseSemigroup& S) {
        std::vector<std::string> out;
        for (std::size_t i = 0; i < S.size(); ++i)
          out.push_back(S.has_elements() ? S.element(static_cast<int>(i)).to_string()
                                         : std::to_string(i));
        return out;
      });

  m.def("symmetric_inverse_2", &symmetric_inverse_2);
  m.def("brandt_2", &brandt_2);
  m.def("chain_semilattice", &chain_semilattice);
  m.def("clifford_6", &clifford_6);

  m.def("num_full_inverse_subsemigroups", [](const FiniteInverseSemigroup& S) {
    return full_inverse_subsemigroups(S).size();
  });
  m.def("num_semilattice_congruences", [](const FiniteInverseSemigroup& S) {
    return semilattice_congruences(idempotent_semilattice(S)).size();
  });

  m.def(
      "lattice",
      [](const FiniteInverseSemigroup& S) {
        CongruenceLattice lat = build_lattice(S);
        py::list nodes;
        for (const auto& node : lat.nodes) {
          py::dict d;
          d["sub"] = node.pair.sub.members();
          py::list tau_blocks;
          for (const auto& blk : node.pair.tau.blocks()) {
            py::list b;
            for (int pos : blk)
              b.append(S.idempotents()[pos]);
            tau_blocks.append(b);
          }
          d["tau"] = tau_blocks;
          d["relation"] = relation_blocks(node.rho);
          nodes.append(d);
        }
        py::dict out;
        out["count"] = lat.nodes.size();
        out["nodes"] = nodes;
        out["hasse"] = lat.hasse;
        return out;
      },
      "all left congruences with their coordinates and the cover edges");

  m.def("brute_force_count", [](const FiniteInverseSemigroup& S, const std::string& strategy) {
    OracleStrategy st = strategy == "principal-joins" ? OracleStrategy::kPrincipalJoins
                                                      : OracleStrategy::kPartitions;
    return brute_force_left_congruences(S, st).size();
  });

  m.def("certify", [](const FiniteInverseSemigroup& S, const std::string& name) {
    OracleReport rep = certify(S, name);
    py::dict out;
    out["semigroup"] = rep.semigroup;
    out["count"] = rep.congruence_count;
    out["kernel_always_inverse"] = rep.kernel_always_inverse;
    py::list checks;
    for (const auto& c : rep.checks) {
      py::dict d;
      d["name"] = c.name;
      d["pass"] = c.pass;
      if (!c.pass)
        d["counterexample"] = c.counterexample;
      checks.append(d);
    }
    out["checks"] = checks;
    out["all_pass"] = rep.all_pass();
    return out;
  });

  auto b = m.def_submodule("bicyclic", "symbolic congruences on the bicyclic monoid");
  b.def("mul", [](std::pair<std::int64_t, std::int64_t> x, std::pair<std::int64_t, std::int64_t> y) {
    auto r = bicyclic::mul({x.first, x.second}, {y.first, y.second});
    return std::make_pair(r.a, r.b);
  });
  b.def("check", [](const std::string& trace_text, const std::string& sub_text) {
    auto trace = bicyclic::parse_trace(trace_text);
    auto sub = bicyclic::parse_sub(sub_text);
    py::dict out;
    out["valid"] = bicyclic::is_valid_pair(trace, sub);
    out["normalizer"] = trace.normalizer().to_string();
    if (trace.tail() == bicyclic::TailKind::kPeriodic) {
      out["threshold"] = trace.shift_threshold();
      out["period"] = trace.period();
    }
    return out;
  });
}
