#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "chainsemi/claims.hpp"
#include "chainsemi/formats.hpp"

namespace py = pybind11;
using namespace chainsemi;

namespace {

Family family_arg(const std::string& name) {
  const auto f = family_from_name(name);
  if (!f) throw py::value_error("unknown family '" + name + "'");
  return *f;
}

Relation relation_arg(const std::string& name) {
  const auto r = relation_from_name(name);
  if (!r) throw py::value_error("unknown relation '" + name + "'");
  return *r;
}

Method method_arg(const std::string& name) {
  if (name == "oracle") return Method::oracle;
  if (name == "characterization") return Method::characterization;
  throw py::value_error("unknown method '" + name + "'");
}

std::string map_repr(const PartialMap& m) {
  std::ostringstream os;
  os << "PartialMap(n=" << m.chain_size() << ", {";
  bool first = true;
  for (point_type x : m.domain()) {
    if (!first) os << ", ";
    os << x << ": " << m.value(x);
    first = false;
  }
  os << "})";
  return os.str();
}

py::dict properties_dict(const PartialMap& m) {
  const PropertySet p = classify(m);
  py::dict d;
  d["contraction"] = p.contraction;
  d["order_preserving"] = p.order_preserving;
  d["order_reversing"] = p.order_reversing;
  d["isometry"] = p.isometry;
  d["order_decreasing"] = p.order_decreasing;
  d["idempotent"] = p.idempotent;
  d["full"] = p.full;
  return d;
}

std::vector<std::vector<map_id>> classes_as_ids(const ElementSet& set,
                                                const RelationClasses& rc) {
  std::vector<std::vector<map_id>> out;
  out.reserve(rc.classes.size());
  for (const auto& cls : rc.classes) {
    std::vector<map_id> ids;
    ids.reserve(cls.size());
    for (std::size_t pos : cls) ids.push_back(canonical_id(set.elements[pos]));
    out.push_back(std::move(ids));
  }
  return out;
}

py::dict claim_dict(const ClaimResult& c) {
  py::dict d;
  d["claim_id"] = c.claim_id;
  d["statement"] = c.statement;
  d["family"] = family_name(c.family);
  d["n"] = c.n;
  d["method"] = c.method;
  d["status"] = status_name(c.status);
  d["witness"] = c.witness;
  d["detail"] = c.detail;
  d["runtime_ms"] = c.runtime_ms;
  return d;
}

}  // namespace

PYBIND11_MODULE(_chainsemi, m) {
  m.doc() = "semigroups of partial contractions on a finite chain: "
            "enumeration, starred Green's relations, abundance, regularity";

  py::register_exception<Error>(m, "ChainsemiError");

  py::class_<PartialMap>(m, "PartialMap")
      .def(py::init([](int n, const std::vector<std::pair<int, int>>& pairs) {
             return make(n, pairs);
           }),
           py::arg("n"), py::arg("pairs") = std::vector<std::pair<int, int>>{})
      .def_property_readonly("n", &PartialMap::chain_size)
      .def_property_readonly("canonical_id", [](const PartialMap& m) {
        return canonical_id(m);
      })
      .def("value", &PartialMap::value, py::arg("point"))
      .def("defined", &PartialMap::defined, py::arg("point"))
      .def("domain", &PartialMap::domain)
      .def("image", &PartialMap::image)
      .def("fixed_points", &PartialMap::fixed_points)
      .def("height", &PartialMap::height)
      .def("is_empty_map", &PartialMap::is_empty_map)
      .def("is_identity", &PartialMap::is_identity)
      .def("is_idempotent", &is_idempotent_via_fixpoints)
      .def("classify", &properties_dict)
      .def("kernel",
           [](const PartialMap& m) {
             const KernelPartition k = kernel(m);
             return py::make_tuple(k.blocks, k.images);
           })
      .def("__mul__", [](const PartialMap& a, const PartialMap& b) {
        return compose(a, b);
      })
      .def("__eq__", [](const PartialMap& a, const PartialMap& b) { return a == b; })
      .def("__hash__", [](const PartialMap& m) {
        return py::hash(py::make_tuple(m.chain_size(), canonical_id(m)));
      })
      .def("__repr__", &map_repr);

  m.def("identity", &identity, py::arg("n"));
  m.def("decode", &decode, py::arg("n"), py::arg("canonical_id"));
  m.def("compose", &compose, py::arg("a"), py::arg("b"));
  m.def("member", [](const std::string& family, const PartialMap& m) {
    return member(family_arg(family), m);
  }, py::arg("family"), py::arg("map"));

  m.def("enumerate_ids",
        [](const std::string& family, int n, int max_n) {
          EnumerationOptions opts;
          opts.max_n = max_n;
          return enumerate_family(family_arg(family), n, opts).ids();
        },
        py::arg("family"), py::arg("n"), py::arg("max_n") = 6);
  m.def("enumerate_maps",
        [](const std::string& family, int n, int max_n) {
          EnumerationOptions opts;
          opts.max_n = max_n;
          return enumerate_family(family_arg(family), n, opts).elements;
        },
        py::arg("family"), py::arg("n"), py::arg("max_n") = 6);
  m.def("verify_closure",
        [](const std::string& family, int n) {
          const auto result = verify_closure(enumerate_family(family_arg(family), n));
          return py::make_tuple(result.closed, result.violation);
        },
        py::arg("family"), py::arg("n"));

  m.def("classic_classes",
        [](const std::string& family, int n, const std::string& relation) {
          const ElementSet set = enumerate_family(family_arg(family), n);
          return classes_as_ids(set, classic_classes(set, relation_arg(relation)));
        },
        py::arg("family"), py::arg("n"), py::arg("relation"));
  m.def("star_classes",
        [](const std::string& family, int n, const std::string& relation,
           const std::string& method, int max_oracle_n) {
          const ElementSet set = enumerate_family(family_arg(family), n);
          StarOptions opts;
          opts.max_oracle_n = max_oracle_n;
          const RelationClasses rc =
              method_arg(method) == Method::oracle
                  ? star_classes_oracle(set, relation_arg(relation), opts)
                  : star_classes_char(set, relation_arg(relation));
          return classes_as_ids(set, rc);
        },
        py::arg("family"), py::arg("n"), py::arg("relation"),
        py::arg("method") = "characterization", py::arg("max_oracle_n") = 4);
  m.def("jstar_classes",
        [](const std::string& family, int n, int max_jstar_n) {
          const ElementSet set = enumerate_family(family_arg(family), n);
          StarOptions opts;
          opts.max_jstar_n = max_jstar_n;
          opts.max_oracle_n = std::max(max_jstar_n, 4);
          return classes_as_ids(set, jstar_classes(set, opts));
        },
        py::arg("family"), py::arg("n"), py::arg("max_jstar_n") = 3);

  m.def("abundance",
        [](const std::string& family, int n, const std::string& side,
           const std::string& method) {
          if (side != "left" && side != "right") {
            throw py::value_error("side must be 'left' or 'right'");
          }
          const auto verdict =
              abundance(enumerate_family(family_arg(family), n),
                        side == "left" ? Side::left : Side::right, method_arg(method));
          py::dict d;
          d["abundant"] = verdict.abundant;
          d["witness_class"] = verdict.witness_class;
          return d;
        },
        py::arg("family"), py::arg("n"), py::arg("side"),
        py::arg("method") = "characterization");

  m.def("is_regular",
        [](const PartialMap& map, const std::string& family) {
          const ElementSet set = enumerate_family(family_arg(family), map.chain_size());
          const auto verdict = is_regular(map, set);
          py::dict d;
          d["regular"] = verdict.regular;
          d["inverse_witness"] = verdict.inverse_witness;
          return d;
        },
        py::arg("map"), py::arg("family") = "orcp");
  m.def("is_strongly_regular",
        [](const PartialMap& map) {
          const ElementSet set = enumerate_family(Family::ORCP, map.chain_size());
          const auto verdict = is_strongly_regular(map, set);
          py::dict d;
          d["regular"] = verdict.regular;
          d["strongly_regular"] = verdict.strongly_regular;
          d["convex_transversal"] =
              verdict.convex_transversal
                  ? py::cast(verdict.convex_transversal->points)
                  : py::object(py::none());
          return d;
        },
        py::arg("map"));
  m.def("regular_char_orcp", &regular_char_orcp, py::arg("map"));
  m.def("sreg_ids", [](int n) {
    return sreg(enumerate_family(Family::ORCP, n)).ids();
  }, py::arg("n"));

  m.def("transversals",
        [](const PartialMap& map) {
          py::list out;
          for (const Transversal& t : all_transversals(kernel(map))) {
            py::dict d;
            d["points"] = t.points;
            d["convex"] = is_convex(t);
            d["relatively_convex"] = is_relatively_convex(t);
            d["admissible"] = is_admissible(t);
            out.append(std::move(d));
          }
          return out;
        },
        py::arg("map"));

  m.def("claim_ids", [] { return claim_registry(); });
  m.def("verify",
        [](const std::vector<std::string>& claims,
           const std::vector<std::string>& families, int n_min, int n_max,
           const std::string& method, bool compare_methods, int max_jstar_n) {
          Config config;
          config.max_jstar_n = std::min(max_jstar_n, config.max_oracle_n);
          Workspace ws(config);
          ClaimRequest request;
          request.claim_ids = claims;
          for (const std::string& f : families) request.families.push_back(family_arg(f));
          request.n_min = n_min;
          request.n_max = n_max;
          request.method = method_arg(method);
          request.compare_methods = compare_methods;
          const VerificationReport report = run_claims(ws, request);
          py::list out;
          for (const ClaimResult& c : report.claims) out.append(claim_dict(c));
          return out;
        },
        py::arg("claims") = std::vector<std::string>{},
        py::arg("families") = std::vector<std::string>{"cp", "ocp", "orcp"},
        py::arg("n_min") = 1, py::arg("n_max") = 3,
        py::arg("method") = "characterization", py::arg("compare_methods") = false,
        py::arg("max_jstar_n") = 3);

#ifdef CHAINSEMI_VERSION
  m.attr("__version__") = CHAINSEMI_VERSION;
#else
  m.attr("__version__") = "dev";
#endif
}
