#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/chrono.h>

#include "qcong/modring.hpp"
#include "qcong/qcore.hpp"
#include "qcong/suite.hpp"
#include "qcong/theorems.hpp"

namespace py = pybind11;
using namespace qcong;

namespace {

py::int_ to_py(const BigInt& value) {
  return py::reinterpret_steal<py::int_>(PyLong_FromString(value.get_str().c_str(), nullptr, 10));
}

BigInt from_py(const py::int_& value) { return BigInt(py::str(value).cast<std::string>()); }

/// Coefficient list, lowest degree first.
py::list coeffs(const IntPoly& p) {
  py::list out;
  for (const auto& c : p.coeffs()) out.append(to_py(c));
  return out;
}

IntPoly poly_from(const std::vector<py::int_>& values) {
  std::vector<BigInt> c;
  c.reserve(values.size());
  for (const auto& v : values) c.push_back(from_py(v));
  return IntPoly(std::move(c));
}

PsiSpec psi_named(const std::string& name, std::int64_t a, std::int64_t m) {
  if (name == "zero") return PsiSpec::zero(a, m);
  if (name == "psi_m") return PsiSpec::psi_m(a, m);
  if (name == "identity") return PsiSpec::identity(a, m);
  throw py::value_error("psi must be 'zero', 'psi_m' or 'identity'");
}

}  // namespace

PYBIND11_MODULE(_qcongruence, m) {
  m.doc() = "Exact q-binomial congruence kernel";

  py::register_exception<Error>(m, "Error");
  py::register_exception<InexactDivision>(m, "InexactDivision");
  py::register_exception<PsiHypothesisViolated>(m, "PsiHypothesisViolated");

  py::class_<VerificationReport>(m, "VerificationReport")
      .def_readonly("statement", &VerificationReport::statement)
      .def_readonly("params", &VerificationReport::params)
      .def_readonly("passed", &VerificationReport::pass)
      .def_readonly("witness", &VerificationReport::witness)
      .def_property_readonly("elapsed_ms", &VerificationReport::elapsed_ms)
      .def("to_json", [](const VerificationReport& r) { return to_json(r).dump(); })
      .def("__repr__", [](const VerificationReport& r) { return format_text(r); });

  m.def("q_int", [](std::int64_t n) { return coeffs(q_int(n)); }, py::arg("n"));
  m.def("q_binom", [](std::int64_t n, std::int64_t k) { return coeffs(q_binom(n, k)); },
        py::arg("n"), py::arg("k"));
  m.def("cyclotomic", [](std::int64_t d) { return coeffs(cyclotomic(d)); }, py::arg("d"));
  m.def("central_qbinom_sum", [](std::int64_t n) { return coeffs(central_qbinom_sum(n)); },
        py::arg("n"));
  m.def("to_canonical", [](const std::vector<py::int_>& c) { return to_canonical(poly_from(c)); });
  m.def("divrem_monic", [](const std::vector<py::int_>& p, const std::vector<py::int_>& d) {
    auto [quot, rem] = divrem_monic(poly_from(p), poly_from(d));
    return py::make_tuple(coeffs(quot), coeffs(rem));
  });
  m.def("char3", [](std::int64_t k) { return to_int(char3(k)); });
  m.def("nu3", [](const py::int_& n) -> py::object {
    const Valuation v = nu3(from_py(n));
    if (v.is_infinite()) return py::float_(INFINITY);
    return py::int_(v.value());
  });
  m.def("psi_m", &qcong::psi_m, py::arg("a"), py::arg("m"), py::arg("k"));

  m.def("verify_eq13", [](std::int64_t a, std::int64_t m, bool truncate, int power) {
    return verify_eq13(a, m, {.truncate = truncate, .modulus_power = power});
  }, py::arg("a"), py::arg("m"), py::arg("truncate") = false, py::arg("power") = 2);
  m.def("verify_eq14", &verify_eq14, py::arg("a"), py::arg("perturb_r") = false);
  m.def("verify_eq21", [](std::int64_t a, std::int64_t m, const std::string& psi, int power) {
    return verify_eq21(a, m, psi_named(psi, a, m), power);
  }, py::arg("a"), py::arg("m"), py::arg("psi") = "zero", py::arg("power") = 2);
  m.def("psi_check", [](std::int64_t a, std::int64_t m, const std::string& psi) {
    return psi_check(psi_named(psi, a, m));
  }, py::arg("a"), py::arg("m"), py::arg("psi") = "psi_m");
  m.def("verify_identity33", &verify_identity33, py::arg("a"), py::arg("m"),
        py::arg("drop_term") = std::nullopt);
  m.def("verify_lemma31", &verify_lemma31, py::arg("a"), py::arg("k"), py::arg("l"));
  m.def("verify_lemma32", [](std::int64_t a, const std::string& psi) {
    return verify_lemma32(a, psi_named(psi, a, 1));
  }, py::arg("a"), py::arg("psi") = "psi_m");
  m.def("verify_ssz12", &verify_ssz12, py::arg("a"));
  m.def("verify_ssz_quotient", &verify_ssz_quotient, py::arg("n"));
  m.def("verify_sun_tauraso", &verify_sun_tauraso, py::arg("p"), py::arg("a"),
        py::arg("bound") = 1'000'000);
  m.def("verify_remark14", &verify_remark14, py::arg("a"), py::arg("cross_check_max_a") = 3);
  m.def("q_lucas_check", &q_lucas_check, py::arg("d"), py::arg("x1"), py::arg("y1"),
        py::arg("x2"), py::arg("y2"));

  m.def("run_suite", [](const std::string& level, int jobs) {
    SuiteConfig config = SuiteConfig::defaults(level == "full" ? SuiteLevel::kFull : SuiteLevel::kQuick);
    config.jobs = jobs;
    py::gil_scoped_release release;
    return suite_to_json(run_suite(config)).dump();
  }, py::arg("level") = "quick", py::arg("jobs") = 1,
     "Runs the verification grid and returns the JSON report array as a string.");
}
