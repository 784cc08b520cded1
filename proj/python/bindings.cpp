#include <sstream>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "rigidlift/cli.hpp"
#include "rigidlift/error.hpp"
#include "rigidlift/io.hpp"

namespace py = pybind11;
using namespace rigidlift;

namespace {

OrCycMorphism load_morphism(const std::string& path) {
  MorphismSpec s = load_morphism_spec(path);
  return OrCycMorphism::from_ids(load_graph(s.source), load_graph(s.target), s.edge_map);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Graph Jacobians, orientations and rigidity of cyclic bijections";

  static py::exception<Error> error(m, "Error");
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      // args = (kind, message)
      py::object err = error;
      PyErr_SetObject(err.ptr(), py::make_tuple(std::string(to_string(e.kind())), e.message()).ptr());
    }
  });

  m.def("run", [](const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int code = run_cli(args, out, err);
    return py::make_tuple(code, out.str(), err.str());
  }, py::arg("args"), "Run the command line; returns (exit code, stdout, stderr).");

  m.def("info", [](const std::string& graph) { return info_report(load_graph(graph)).dump(); }, py::arg("graph"));

  m.def("info_text", [](const std::string& text) { return info_report(parse_graph(text)).dump(); },
        py::arg("text"));

  m.def("rigidity", [](const std::string& morphism, bool witness, bool lift, std::size_t max_classes) {
    return rigidity_report(load_morphism(morphism), {witness, lift, max_classes}).dump();
  }, py::arg("morphism"), py::arg("witness") = false, py::arg("lift") = false,
     py::arg("max_classes") = kDefaultMaxClasses);

  m.def("selftest", [](const std::string& fixtures) { return selftest_report(fixtures).dump(); },
        py::arg("fixtures"));
}
