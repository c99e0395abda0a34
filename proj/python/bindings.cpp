#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "melonrep/comparability.hpp"
#include "melonrep/error.hpp"
#include "melonrep/io.hpp"
#include "melonrep/line_analysis.hpp"
#include "melonrep/melon_rep.hpp"
#include "melonrep/oracle.hpp"
#include "melonrep/report.hpp"

namespace py = pybind11;
using namespace melonrep;

namespace {

Graph graph_from(const std::string& text) {
  if (auto named = parse_named(text)) return build_named(*named);
  if (text.find(' ') != std::string::npos || text.find('\n') != std::string::npos) return parse_edge_list(text);
  return build_melon(MelonSpec::parse(text));
}

std::vector<std::pair<std::string, std::string>> edge_pairs(const Graph& g) {
  std::vector<std::pair<std::string, std::string>> out;
  for (const auto& e : g.edges()) out.emplace_back(g.label(e.u), g.label(e.v));
  return out;
}

SearchBudget budget_of(int max_vertices, int max_k, std::int64_t node_limit) {
  SearchBudget b{max_vertices, max_k, node_limit};
  b.validate();
  return b;
}

}  // namespace

PYBIND11_MODULE(_melonrep, m) {
  m.doc() = "Word-representants of melon graphs and their line graphs";

  static py::exception<Error> error(m, "MelonrepError");
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::set_error(error, e.what());
    }
  });

  py::class_<Graph>(m, "Graph")
      .def_static("parse", &graph_from, py::arg("text"),
                  "Named graph (\"C6\"), melon spec (\"3,3,3\") or edge list (one \"a b\" pair per line)")
      .def_property_readonly("vertices", &Graph::labels)
      .def_property_readonly("edges", &edge_pairs)
      .def("adjacent", py::overload_cast<std::string_view, std::string_view>(&Graph::adjacent, py::const_))
      .def("__len__", &Graph::order)
      .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; });

  m.def("melon", [](const std::string& spec) { return build_melon(MelonSpec::parse(spec)); }, py::arg("spec"));
  m.def("line_graph", &line_graph, py::arg("graph"));
  m.def("local_complement", &local_complement, py::arg("graph"), py::arg("vertex"));

  m.def("parse_word", &parse_word, py::arg("text"));
  m.def("word_text", py::overload_cast<const Word&>(&to_string), py::arg("word"));
  m.def("represents", &represents, py::arg("word"), py::arg("graph"));
  m.def("first_mismatch", &first_mismatch, py::arg("word"), py::arg("graph"));
  m.def("uniformity", &is_k_uniform, py::arg("word"));

  m.def("representation_number", [](const std::string& spec) {
    const RepVerdict v = representation_number(MelonSpec::parse(spec));
    return py::dict(py::arg("r") = v.r, py::arg("word") = v.certificate,
                    py::arg("reason") = std::string(to_string(v.reason)), py::arg("construction") = v.construction);
  }, py::arg("spec"));

  m.def("comparability", [](const std::string& spec) -> std::optional<std::string> {
    if (auto tag = is_comparability_melon(MelonSpec::parse(spec))) return std::string(to_string(*tag));
    return std::nullopt;
  }, py::arg("spec"));

  m.def("prn", [](const std::string& spec) {
    const PrnVerdict v = prn(MelonSpec::parse(spec));
    return py::dict(py::arg("prn") = v.prn, py::arg("perms") = v.realizer.perms,
                    py::arg("witness") = std::string(to_string(v.witness)));
  }, py::arg("spec"));

  m.def("line_rep_number", [](const std::string& spec) {
    const LineVerdict v = line_rep_number(MelonSpec::parse(spec));
    return py::dict(py::arg("r") = v.r, py::arg("word") = v.certificate, py::arg("construction") = v.construction);
  }, py::arg("spec"));

  m.def("analyze", [](const std::string& spec, bool oracle, int max_vertices, int max_k, std::int64_t node_limit) {
    ReportOptions opts;
    opts.oracle = oracle;
    opts.budget = budget_of(max_vertices, max_k, node_limit);
    return analyze_report(MelonSpec::parse(spec), opts);
  }, py::arg("spec"), py::arg("oracle") = false, py::arg("max_vertices") = 10, py::arg("max_k") = 3,
        py::arg("node_limit") = 100'000'000, "JSON report, same as the CLI's analyze");

  m.def("min_uniform_rep", [](const Graph& g, int max_vertices, int max_k, std::int64_t node_limit) -> py::object {
    auto r = min_uniform_rep(g, budget_of(max_vertices, max_k, node_limit));
    if (!r) return py::none();
    return py::dict(py::arg("k") = r->k, py::arg("word") = r->witness, py::arg("nodes") = r->nodes);
  }, py::arg("graph"), py::arg("max_vertices") = 10, py::arg("max_k") = 3, py::arg("node_limit") = 100'000'000);

  m.def("min_perm_rep", [](const Graph& g, int max_vertices, int max_k, std::int64_t node_limit) -> py::object {
    auto r = min_perm_rep(g, budget_of(max_vertices, max_k, node_limit));
    if (!r) return py::none();
    return py::dict(py::arg("k") = r->k, py::arg("perms") = r->realizer.perms, py::arg("nodes") = r->nodes);
  }, py::arg("graph"), py::arg("max_vertices") = 10, py::arg("max_k") = 3, py::arg("node_limit") = 100'000'000);

  m.def("dot", [](const std::string& spec, const std::string& what) { return dot_output(MelonSpec::parse(spec), what); },
        py::arg("spec"), py::arg("what") = "graph");
  m.attr("REPORT_SCHEMA") = std::string(kReportSchema);
}
