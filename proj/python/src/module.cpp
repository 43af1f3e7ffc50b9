// Python bindings. Results cross the boundary as JSON text; the package
// wrapper turns them into dicts.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "eisenfold/errors.hpp"
#include "eisenfold/io.hpp"
#include "eisenfold/render.hpp"

namespace py = pybind11;
using namespace eisenfold;

namespace {

EisensteinInt beta_of(std::int64_t a, std::int64_t b) { return to_big(LatticePoint{a, b}); }

}  // namespace

PYBIND11_MODULE(_eisenfold, m) {
  m.doc() = "Good colorings of the sphere triangulations T(beta)";
  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<UndeterminedError>(m, "UndeterminedError", PyExc_RuntimeError);
  py::register_exception<InternalError>(m, "InternalError", PyExc_AssertionError);

  m.def("complex_json", [](std::int64_t a, std::int64_t b) { return dump(complex_json(*make_complex(beta_of(a, b)))); },
        py::arg("a"), py::arg("b"));
  m.def(
      "coloring_json",
      [](std::int64_t a, std::int64_t b, const std::string& scheme) {
        if (scheme == "cf") return dump(coloring_json(continued_fraction_coloring(beta_of(a, b))));
        if (scheme == "alternating") return dump(coloring_json(alternating_coloring(make_complex(beta_of(a, b)))));
        throw DomainError("unknown scheme: " + scheme);
      },
      py::arg("a"), py::arg("b"), py::arg("scheme") = "cf");
  m.def(
      "validate_json", [](const std::string& text) { return dump(coloring_json(coloring_from_json(Json::parse(text)))); },
      py::arg("text"));
  m.def(
      "eta_limit_json",
      [](const std::string& zeta, int max_digits) {
        EtaLimitOptions o;
        o.max_digits = max_digits;
        py::gil_scoped_release release;
        return dump(eta_limit_json(eta_limit_numeric(parse_surd(zeta), o)));
      },
      py::arg("zeta"), py::arg("max_digits") = 7000);
  m.def(
      "search_json",
      [](std::int64_t a, std::int64_t b, const std::string& mode, double time_limit, unsigned threads,
         std::uint64_t seed) {
        SearchOptions o;
        if (mode != "exact" && mode != "anytime") throw DomainError("mode must be exact or anytime");
        o.mode = mode == "exact" ? SearchMode::Exact : SearchMode::Anytime;
        o.time_limit_seconds = time_limit;
        o.threads = threads;
        o.seed = seed;
        const auto c = make_complex(beta_of(a, b));
        py::gil_scoped_release release;
        return dump(search_json(min_fold_search(c, o)));
      },
      py::arg("a"), py::arg("b"), py::arg("mode") = "exact", py::arg("time_limit") = 0.0, py::arg("threads") = 0,
      py::arg("seed") = 1);
  m.def(
      "render_svg",
      [](std::int64_t a, std::int64_t b, int domains, bool show_rhombus, bool show_folds, double scale) {
        RenderSpec s;
        s.beta = {a, b};
        s.domains = domains;
        s.show_rhombus = show_rhombus;
        s.show_folds = show_folds;
        s.scale = scale;
        return render_svg(s);
      },
      py::arg("a"), py::arg("b"), py::arg("domains") = 1, py::arg("show_rhombus") = true, py::arg("show_folds") = true,
      py::arg("scale") = 20.0);
  m.def(
      "fib_counts", [](int n) { return py::make_tuple(fib_fold_count(n).get_str(), fib_face_count(n).get_str()); },
      py::arg("n"));
}
