#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "polarmod/cli.hpp"

namespace py = pybind11;
using namespace polarmod;
using namespace polarmod::cli;

namespace {

std::string analyze(const std::string& command, const std::optional<std::string>& problem_json,
                    double tol, double rank_tol, std::uint64_t seed,
                    std::optional<std::size_t> components) {
    Options opt;
    opt.tol = tol;
    opt.rank_tol = rank_tol;
    opt.seed = seed;
    opt.components = components;
    std::optional<ProblemFile> problem;
    if (problem_json) problem = parse_problem_json(json::parse(*problem_json));
    return emit_report(run_command(command, problem, opt), "json");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Polar decompositions and generalized inverses of adjointable "
              "operator matrices; exact diagonal multiplication operators; "
              "graded families.";

    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const SchemaError& e) {
            PyErr_SetString(PyExc_ValueError, e.what());
        } catch (const ParseError& e) {
            PyErr_SetString(PyExc_ValueError, e.what());
        }
    });

    m.def("analyze", &analyze, py::arg("command"), py::arg("problem_json") = py::none(),
          py::arg("tol") = 1e-8, py::arg("rank_tol") = 1e-10, py::arg("seed") = 42,
          py::arg("components") = py::none(),
          "Run one analysis command on a problem given as a JSON string; "
          "returns the JSON report.");

    m.def(
        "selftest",
        [](std::uint64_t seed, int trials, double tol) {
            Tolerances t;
            t.identity_tol = tol;
            return run_selftest(seed, trials, t);
        },
        py::arg("seed") = 42, py::arg("trials") = 40, py::arg("tol") = 1e-8,
        "Randomized invariant suites; returns (passed, failed).");
}
