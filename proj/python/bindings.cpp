#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "spm/core.hpp"
#include "spm/counting.hpp"
#include "spm/errors.hpp"
#include "spm/export.hpp"
#include "spm/incremental.hpp"
#include "spm/infinite.hpp"
#include "spm/sptree.hpp"
#include "spm/verify.hpp"

namespace py = pybind11;

namespace {

using Parts = std::vector<int>;

spm::Partition pile(const Parts& parts) { return spm::Partition(parts); }

std::optional<spm::Coords> shown(const std::optional<std::string>& coords) {
  if (!coords) return std::nullopt;
  return spm::parse_coords(*coords);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Sand pile model lattices";

  auto base = py::register_exception<spm::Error>(m, "SpmError", PyExc_ValueError);
  py::register_exception<spm::BudgetExceeded>(m, "BudgetExceeded", base.ptr());

  py::class_<spm::Diagram>(m, "Diagram")
      .def_property_readonly("n", &spm::Diagram::n)
      .def_property_readonly("kind", [](const spm::Diagram& d) { return d.kind() == spm::DiagramKind::single ? "single" : "upto"; })
      .def_property_readonly("coords", [](const spm::Diagram& d) { return spm::to_string(d.coords()); })
      .def_property_readonly("nodes", [](const spm::Diagram& d) {
        std::vector<Parts> out;
        for (const auto& s : d.nodes()) out.push_back(s.vec());
        return out;
      })
      .def_property_readonly("edges", [](const spm::Diagram& d) {
        std::vector<std::tuple<spm::NodeId, int, spm::NodeId>> out;
        for (const auto& e : d.edges()) out.emplace_back(e.source, e.label, e.target);
        return out;
      })
      .def("__len__", &spm::Diagram::size)
      .def("__eq__", [](const spm::Diagram& a, const spm::Diagram& b) { return a == b; })
      .def("to_dot", [](const spm::Diagram& d, std::optional<std::string> c) { return spm::to_dot(d, shown(c)); },
           py::arg("coords") = py::none())
      .def("to_json", [](const spm::Diagram& d, std::optional<std::string> c) { return spm::to_json(d, shown(c)); },
           py::arg("coords") = py::none());

  m.def("build", [](int n, const std::string& method) {
    if (method == "incremental") return spm::build_incremental(n, spm::Budget::from_env());
    if (method != "bfs") throw spm::Error("unknown method '" + method + "'");
    return spm::build_bfs(n, spm::Budget::from_env());
  }, py::arg("n"), py::arg("method") = "bfs");
  m.def("build_next", [](const spm::Diagram& d) { return spm::build_next(d, spm::Budget::from_env()); });
  m.def("build_upto", [](int n, const std::string& method) {
    return spm::build_upto(n, method == "explore" ? spm::UptoMethod::explore : spm::UptoMethod::incremental,
                           spm::Budget::from_env());
  }, py::arg("n"), py::arg("method") = "incremental");
  m.def("diagram_from_json", [](const std::string& text) { return spm::diagram_from_json(text, spm::Budget::from_env()); });

  m.def("is_spm", [](const Parts& s) { return spm::is_spm(pile(s)); });
  m.def("stair_length", [](const Parts& s) { return spm::stair_length(pile(s)); });
  m.def("fixed_point", [](int n) { return spm::fixed_point(n).vec(); });
  m.def("fall", [](const Parts& s, int i) -> std::optional<Parts> {
    auto t = spm::fall(pile(s), i);
    if (!t) return std::nullopt;
    return t->vec();
  });
  m.def("successors", [](const Parts& s) {
    std::vector<std::pair<int, Parts>> out;
    for (const auto& t : spm::successors(pile(s))) out.emplace_back(t.label, t.target.vec());
    return out;
  });

  m.def("inf", [](const Parts& a, const Parts& b) { return spm::infimum(pile(a), pile(b)).vec(); });
  m.def("sup", [](const Parts& a, const Parts& b) {
    const spm::Partition s = pile(a);
    return spm::supremum(s, pile(b), spm::build_bfs(s.grains(), spm::Budget::from_env())).vec();
  });
  m.def("leq", [](const Parts& a, const Parts& b) { return spm::to_string(spm::leq(pile(a), pile(b))); });

  m.def("shot_vector", [](const Parts& tail) { return spm::shot_vector(spm::InfinitePartition(pile(tail))).counts; });
  m.def("inf_infinite", [](const Parts& a, const Parts& b) {
    return spm::inf_infinite(spm::InfinitePartition(pile(a)), spm::InfinitePartition(pile(b))).tail().vec();
  });
  m.def("sup_infinite", [](const Parts& a, const Parts& b) {
    const auto r = spm::sup_infinite_detailed(spm::InfinitePartition(pile(a)), spm::InfinitePartition(pile(b)));
    return std::make_pair(r.value.tail().vec(), r.used_fallback);
  }, "Join of two tails and whether the descent fallback was needed");
  m.def("leq_infinite", [](const Parts& a, const Parts& b) {
    return spm::to_string(spm::leq_infinite(spm::InfinitePartition(pile(a)), spm::InfinitePartition(pile(b))));
  });

  m.def("count", [](int n, const std::string& method, const std::string& variant) -> long long {
    if (method == "bfs") return static_cast<long long>(spm::build_bfs(n, spm::Budget::from_env()).size());
    if (method == "p-rec") {
      const auto v = variant.empty() ? spm::DeltaVariant::corrected : spm::parse_delta_variant(variant);
      return spm::p_recursion(std::max(n, 2), v).spm_size(n);
    }
    if (method == "tree") {
      const auto v = variant.empty() ? spm::CVariant::structural : spm::parse_c_variant(variant);
      return spm::spm_size_via_tree(n, spm::TreeSumMode::structural, v);
    }
    throw spm::Error("unknown count method '" + method + "'");
  }, py::arg("n"), py::arg("method") = "bfs", py::arg("variant") = "");
  m.def("p_table", [](int max_n) { return spm::p_table_oracle(max_n, spm::Budget::from_env()).p; });
  m.def("p_recursion", [](int max_n, const std::string& variant) {
    return spm::p_recursion(max_n, spm::parse_delta_variant(variant)).p;
  }, py::arg("max_n"), py::arg("variant") = "corrected");
  m.def("c_printed", &spm::c_printed);
  m.def("c_structural", &spm::c_structural);
  m.def("d_structural", &spm::d_structural);
  m.def("generating_partitions", [](int n) {
    std::vector<Parts> out;
    for (const auto& g : spm::generating_partitions(n)) out.push_back(g.body.vec());
    return out;
  });

  m.def("classify", [](const Parts& parts) {
    const spm::Partition s = pile(parts);
    const spm::TreeLevels tree = spm::build_tree(s.grains(), spm::Budget::from_env());
    const auto& node = tree.node(tree.id_of(s));
    py::dict out;
    out["n_root"] = node.n_root ? py::cast(*node.n_root) : py::none();
    out["x_max"] = node.x_max;
    out["memberships"] = std::vector<int>(node.memberships.begin(), node.memberships.end());
    const auto labels = spm::successors_via_tree(s, tree);
    out["successors"] = std::vector<int>(labels.begin(), labels.end());
    return out;
  });
  m.def("chain", [](int depth) {
    const auto c = spm::chain_decomposition(depth);
    std::vector<Parts> chain;
    for (const auto& s : c.chain) chain.push_back(s.vec());
    std::vector<std::pair<int, int>> attachments;
    for (const auto& a : c.attachments) attachments.emplace_back(a.level, a.k);
    return std::make_pair(chain, attachments);
  });

  m.def("reconcile", [](int max_n, int max_l, int max_k, int max_gen, const std::string& format) {
    const auto r = spm::reconcile({max_n, max_l, max_k, max_gen, spm::Budget::from_env()});
    return format == "json" ? r.to_json() : r.to_csv();
  }, py::arg("max_n") = 10, py::arg("max_l") = 15, py::arg("max_k") = 6, py::arg("max_gen") = 200,
     py::arg("format") = "csv");
  m.def("verify", [](int n) {
    std::vector<std::tuple<std::string, bool, std::string>> out;
    for (const auto& r : spm::verify_all(n, spm::Budget::from_env())) out.emplace_back(r.name, r.passed, r.detail);
    return out;
  });
}
