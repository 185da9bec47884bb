// Python bindings. Exact values cross the boundary as fractions.Fraction.

#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "qimm/hecke.hpp"
#include "qimm/immanants.hpp"
#include "qimm/suite.hpp"
#include "qimm/weyl.hpp"

namespace py = pybind11;
using namespace qimm;

namespace {

Scalar to_scalar(const py::handle& x) { return parse_scalar(py::str(x).cast<std::string>()); }

py::object to_fraction(const Scalar& x) {
  static py::object fraction = py::module_::import("fractions").attr("Fraction");
  return fraction(to_string(x));
}

py::list matrix_to_py(const TensorOp& op) {
  py::list rows;
  for (const auto& row : op.to_dense()) {
    py::list r;
    for (const auto& x : row) r.append(to_fraction(x));
    rows.append(r);
  }
  return rows;
}

QConfig make_q(const py::object& q) { return QConfig(to_scalar(q)); }

StandardTableau first_tableau(const std::vector<int>& shape) { return standard_tableaux(YoungDiagram(shape)).front(); }

py::dict verdict_dict(const Verdict& v) {
  py::dict d;
  d["ok"] = v.ok();
  d["failures"] = v.failures;
  return d;
}

}  // namespace

PYBIND11_MODULE(_qimm, m) {
  m.doc() = "Exact q-immanant verification for U_q(gl_n)";

  py::register_exception<ConfigError>(m, "ConfigError", PyExc_ValueError);
  py::register_exception<ScaleExceeded>(m, "ScaleExceeded", PyExc_RuntimeError);

  m.def("partitions", [](int size, int max_rows) {
    std::vector<std::vector<int>> out;
    for (const auto& p : max_rows > 0 ? partitions(size, max_rows) : partitions(size)) out.push_back(p.rows());
    return out;
  }, py::arg("size"), py::arg("max_rows") = 0);

  m.def("standard_tableaux", [](const std::vector<int>& shape) {
    std::vector<std::vector<std::vector<int>>> out;
    for (const auto& t : standard_tableaux(YoungDiagram(shape))) out.push_back(t.filling);
    return out;
  }, py::arg("shape"));

  m.def("ssyt_count", [](const std::vector<int>& shape, int n) { return ssyt_count(YoungDiagram(shape), n); },
        py::arg("shape"), py::arg("n"));

  m.def("factorial_schur", [](const std::vector<int>& shape, const py::list& x, const py::function& a) {
    std::vector<Scalar> xs;
    for (const auto& v : x) xs.push_back(to_scalar(v));
    return to_fraction(factorial_schur(YoungDiagram(shape), xs, [&](int k) { return to_scalar(a(k)); }));
  }, py::arg("shape"), py::arg("x"), py::arg("a"));

  m.def("rcheck", [](int n, const py::object& q) { return matrix_to_py(build_Rcheck(n, make_q(q))); },
        py::arg("n"), py::arg("q") = "3/2");

  m.def("verify_rmatrix", [](int n, const py::object& q) { return verdict_dict(verify_rmatrix(n, make_q(q))); },
        py::arg("n"), py::arg("q") = "3/2");

  m.def("primitive_idempotent", [](const std::vector<std::vector<int>>& filling, int n, const py::object& q) {
    std::vector<int> rows;
    for (const auto& r : filling) rows.push_back(static_cast<int>(r.size()));
    const Tableau u{YoungDiagram(rows), filling};
    return matrix_to_py(HeckeAction(n, u.shape.size(), make_q(q)).primitive_idempotent(u));
  }, py::arg("filling"), py::arg("n"), py::arg("q") = "3/2");

  m.def("verify_rtt", [](int n, int N, const py::object& q) { return verdict_dict(verify_rtt(build_rep(n, N, make_q(q)))); },
        py::arg("n"), py::arg("N"), py::arg("q") = "3/2");

  m.def("qimmanant", [](int n, int N, const std::vector<int>& shape, const py::object& q) {
    return matrix_to_py(qimmanant(build_rep(n, N, make_q(q)), first_tableau(shape)));
  }, py::arg("n"), py::arg("N"), py::arg("shape"), py::arg("q") = "3/2");

  m.def("immanant_poly", [](int n, int N, const std::vector<int>& shape, const py::object& q) {
    const ImmanantPoly p = build_immanant_poly(build_rep(n, N, make_q(q)), first_tableau(shape));
    py::dict out;
    for (const auto& [k, c] : p.coefficients.terms()) out[py::int_(k)] = matrix_to_py(c);
    return out;
  }, py::arg("n"), py::arg("N"), py::arg("shape"), py::arg("q") = "3/2");

  m.def("immanant_eigenvalue", [](int n, const std::vector<int>& shape, const std::vector<int>& lambda,
                                  const py::object& z, const py::object& q) {
    const YoungDiagram l(lambda);
    return to_fraction(immanant_eigenvalue(build_rep(n, l.size(), make_q(q)), first_tableau(shape), to_scalar(z), l));
  }, py::arg("n"), py::arg("shape"), py::arg("lam"), py::arg("z") = 0, py::arg("q") = "3/2");

  m.def("eigenvalue_oracle", [](int n, const std::vector<int>& shape, const std::vector<int>& lambda,
                                const py::object& z, const py::object& q, int offset) {
    return to_fraction(immanant_eigenvalue_oracle(YoungDiagram(shape), YoungDiagram(lambda), n, to_scalar(z), make_q(q), offset));
  }, py::arg("n"), py::arg("shape"), py::arg("lam"), py::arg("z") = 0, py::arg("q") = "3/2",
     py::arg("offset") = kStatedOffset);

  m.def("verify_newton", [](int n, int N, int order, const py::object& q) {
    return verdict_dict(verify_newton(build_rep(n, N, make_q(q)), order));
  }, py::arg("n"), py::arg("N"), py::arg("order") = 6, py::arg("q") = "3/2");

  m.def("verify_capelli", [](const std::vector<int>& shape, int n, const py::object& q) {
    const QConfig cfg = make_q(q);
    IdealEngine engine(relation_generators(n, cfg));
    const CapelliReport r = verify_capelli(first_tableau(shape), n, cfg, engine);
    py::dict d = verdict_dict(r.verdict);
    d["entries"] = r.entries;
    d["literal_zero"] = r.literal_zero;
    d["certified"] = r.certified;
    return d;
  }, py::arg("shape"), py::arg("n") = 2, py::arg("q") = "3/2");

  m.def("run_report", [](const std::string& config_json) {
    RunConfig cfg = apply_json(RunConfig{}, nlohmann::json::parse(config_json));
    Report report;
    {
      py::gil_scoped_release release;
      report = run_suite(cfg);
    }
    return emit(report, Format::json);
  }, py::arg("config_json"), "Runs the suites for a JSON config (CLI flag names as keys); returns the JSON report.");
}
