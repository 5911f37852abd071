#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "koszul/cli.hpp"
#include "koszul/verify.hpp"

namespace py = pybind11;
using namespace koszul;

namespace {

py::tuple run(const std::string& command, const std::string& suite, const std::string& algebra,
              const std::string& field, std::optional<std::size_t> p_max, std::optional<std::size_t> w_max,
              std::uint64_t seed, const std::string& coeff, const std::string& side, std::size_t trials) {
    RunConfig c;
    c.algebra = algebra;
    c.field = field;
    c.p_max = p_max;
    c.w_max = w_max;
    c.seed = seed;
    c.coeff = coeff;
    c.side = side;
    c.trials = trials;
    CommandResult r;
    {
        py::gil_scoped_release release;
        r = run_command(command, suite, c);
    }
    return py::make_tuple(r.exit_code, r.report.dump());
}

}  // namespace

PYBIND11_MODULE(_koszul, m) {
    m.doc() = "Exact Koszul calculus for N-homogeneous algebras";
    m.attr("__version__") = kVersion;
    m.def("commands", &command_names);
    m.def("suites", &suite_names);
    m.def("run", &run, py::arg("command"), py::arg("suite") = "", py::arg("algebra") = "truncated:3",
          py::arg("field") = "Q", py::arg("p_max") = py::none(), py::arg("w_max") = py::none(),
          py::arg("seed") = 1, py::arg("coeff") = "A", py::arg("side") = "homology", py::arg("trials") = 200,
          "Runs a command; returns (exit_code, json_report).");
}
