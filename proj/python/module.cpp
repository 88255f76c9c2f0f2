#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "qgollnitz/errors.hpp"
#include "qgollnitz/keyid.hpp"
#include "qgollnitz/partcomb.hpp"
#include "qgollnitz/qcomb.hpp"
#include "qgollnitz/sweep.hpp"

namespace py = pybind11;
using namespace qgollnitz;

namespace {

py::int_ to_py(const Integer& n) {
  return py::reinterpret_steal<py::int_>(PyLong_FromString(n.str().c_str(), nullptr, 10));
}

Integer from_py(const py::int_& n) { return Integer(py::str(n).cast<std::string>()); }

py::list terms_of(const LaurentPoly& p) {
  py::list out;
  for (const auto& t : p.terms()) out.append(py::make_tuple(t.exponent, to_py(t.coeff)));
  return out;
}

std::string sweep_json(const std::string& name, const std::map<std::string, std::pair<int, int>>& ranges,
                       std::optional<int> order, int jobs, bool timing) {
  const auto id = identity_from_name(name);
  if (!id) throw UsageError("unknown identity '" + name + "'");
  SweepSpec spec;
  spec.identity = *id;
  for (const auto& [param, r] : ranges) spec.ranges[param] = {r.first, r.second};
  spec.order = order;
  spec.jobs = jobs;
  spec.timing = timing;
  SweepReport report;
  {
    py::gil_scoped_release release;
    report = run_sweep(spec);
  }
  return render_report(report, ReportFormat::Json);
}

}  // namespace

PYBIND11_MODULE(_qgollnitz, m) {
  m.doc() = "Exact q-series engine for the bounded Goellnitz identities";
  m.attr("__version__") = std::string(engine_version());

  py::class_<LaurentPoly>(m, "Poly")
      .def(py::init<>())
      .def(py::init([](const py::int_& c) { return LaurentPoly(from_py(c)); }))
      .def_static("parse", [](const std::string& text) { return parse_laurent(text, "q"); })
      .def_static("monomial",
                  [](const py::int_& c, int e) { return LaurentPoly::monomial(from_py(c), e); })
      .def("terms", &terms_of)
      .def("coeff", [](const LaurentPoly& p, int e) { return to_py(p.coeff(e)); })
      .def("at_one", [](const LaurentPoly& p) { return to_py(p.sum_of_coefficients()); })
      .def("is_zero", &LaurentPoly::is_zero)
      .def("shifted", &LaurentPoly::shifted)
      .def("__str__", [](const LaurentPoly& p) { return to_string(p); })
      .def("__repr__", [](const LaurentPoly& p) { return "Poly('" + to_string(p) + "')"; })
      .def(py::self + py::self)
      .def(py::self - py::self)
      .def(py::self * py::self)
      .def(-py::self)
      .def(py::self == py::self)
      .def(py::self != py::self);

  m.def("qbinom", [](int top, int bottom) { return qbinom(top, bottom); }, py::arg("top"),
        py::arg("bottom"));
  m.def("qmultinom", [](int total, const std::vector<int>& parts) { return qmultinom(total, parts); },
        py::arg("total"), py::arg("parts"));

  m.def("lhs_g", [](int i, int j, int k, int L, int M) { return lhs_g({i, j, k, L, M}); });
  m.def("rhs_p", [](int i, int j, int k, int L, int M) { return rhs_p({i, j, k, L, M}); });
  m.def("check_key", [](int i, int j, int k, int L, int M) { return check_key({i, j, k, L, M}); });
  m.def("boundary_value", &boundary_value);
  m.def("closed_form_diag", &closed_form_diag);

  m.def("count_G", [](int L, int n, int a, int b, int c, int ab, int ac, int bc) {
    return to_py(count_G(L, n, {a, b, c, ab, ac, bc}));
  });
  m.def("count_P", [](int L, int n, int i, int j, int k) { return to_py(count_P(L, n, i, j, k)); });
  m.def("check_theorem1", &check_theorem1, py::arg("L"), py::arg("i"), py::arg("j"), py::arg("k"));
  m.def("gollnitz_B", [](int n) { return to_py(gollnitz_B(n)); });
  m.def("gollnitz_C", [](int n) { return to_py(gollnitz_C(n)); });

  m.def("identities", [] {
    std::vector<std::string> out;
    for (auto id : all_identities()) out.emplace_back(identity_name(id));
    return out;
  });
  m.def("_sweep_json", &sweep_json);
}
