// Python bindings: parameters as lists of "k/2" strings, exponential sums as
// dicts from weight tuples to integer coefficients.

#include "chc/characters.hpp"
#include "chc/oracle.hpp"
#include "chc/sweep.hpp"
#include "chc/theta.hpp"
#include "chc/transfer.hpp"

#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;

namespace {

chc::Weight to_weight(const std::vector<std::string>& entries) {
  std::vector<chc::HalfInt> coords;
  for (const auto& e : entries) coords.push_back(chc::HalfInt::parse(e));
  return chc::Weight(coords);
}

py::tuple from_weight(const chc::Weight& w) {
  py::tuple out(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) out[i] = w[i].str();
  return out;
}

py::dict from_expsum(const chc::SignedExpSum& s) {
  py::dict out;
  for (const auto& [w, c] : s.terms()) out[from_weight(w)] = c;
  return out;
}

chc::SignedExpSum to_expsum(const py::dict& d) {
  chc::SignedExpSum out;
  for (auto [k, v] : d) out.add(to_weight(k.cast<std::vector<std::string>>()), v.cast<std::int64_t>());
  return out;
}

chc::HCParameter param(int p, int q, const std::vector<std::string>& lambda) {
  return chc::validate_hc_parameter(to_weight(lambda), p, q);
}

chc::SignaturePair signature(py::tuple rs) { return {rs[0].cast<int>(), rs[1].cast<int>()}; }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact transfer of discrete series characters between unitary groups";

  py::register_exception<chc::InvalidParameter>(m, "InvalidParameter", PyExc_ValueError);
  py::register_exception<chc::SingularPoint>(m, "SingularPoint", PyExc_ArithmeticError);

  m.def("validate", [](int p, int q, const std::vector<std::string>& lambda) {
    const auto l = param(p, q, lambda);
    return py::make_tuple(l.a(), l.b());
  }, py::arg("p"), py::arg("q"), py::arg("lambda_"), "(a, b) of a valid parameter; raises InvalidParameter");

  m.def("theta_signature", [](int p, int q, const std::vector<std::string>& lambda) {
    const auto s = chc::theta_signature(param(p, q, lambda));
    return py::make_tuple(s.r, s.s);
  }, py::arg("p"), py::arg("q"), py::arg("lambda_"));

  m.def("theta_parameter", [](int p, int q, const std::vector<std::string>& lambda) {
    return from_weight(chc::theta_parameter(param(p, q, lambda)));
  }, py::arg("p"), py::arg("q"), py::arg("lambda_"));

  m.def("tau", [](int p, int q, const std::vector<std::string>& lambda) {
    const auto l = param(p, q, lambda);
    return chc::tau_permutation(l, chc::theta_signature(l)).one_line();
  }, py::arg("p"), py::arg("q"), py::arg("lambda_"), "one-line notation, 1-based");

  m.def("ds_numerator", [](int p, int q, const std::vector<std::string>& lambda) {
    return from_expsum(chc::ds_numerator(param(p, q, lambda)).numerator);
  }, py::arg("p"), py::arg("q"), py::arg("lambda_"));

  m.def("ds_evaluate", [](int p, int q, const std::vector<std::string>& lambda, const std::vector<double>& theta) {
    return chc::ds_evaluate(chc::ds_numerator(param(p, q, lambda)), chc::TorusPoint{theta});
  }, py::arg("p"), py::arg("q"), py::arg("lambda_"), py::arg("theta"));

  m.def("transfer_bruteforce", [](int p, int q, const std::vector<std::string>& lambda, py::tuple target) {
    return from_expsum(chc::transfer_bruteforce(param(p, q, lambda), signature(target)));
  }, py::arg("p"), py::arg("q"), py::arg("lambda_"), py::arg("target"));

  m.def("transfer_closed_form", [](int p, int q, const std::vector<std::string>& lambda, py::tuple target) {
    return from_expsum(chc::transfer_closed_form(param(p, q, lambda), signature(target)));
  }, py::arg("p"), py::arg("q"), py::arg("lambda_"), py::arg("target"));

  m.def("equal_up_to_constant", [](const py::dict& a, const py::dict& b) {
    return chc::expsum_equal_up_to_constant(to_expsum(a), to_expsum(b));
  });

  m.def("cauchy_circle_integral", &chc::cauchy_circle_integral, py::arg("k"), py::arg("a"));
  m.def("circle_quadrature", &chc::circle_quadrature, py::arg("k"), py::arg("a"), py::arg("N") = 2048);

  m.def("verify", [](int max_n, const std::string& max_abs, int jobs) {
    const auto report = chc::run_sweep(max_n, chc::HalfInt::parse(max_abs), jobs);
    py::list rows;
    for (const auto& r : report.rows) {
      py::dict row;
      row["p"] = r.p;
      row["q"] = r.q;
      row["lambda"] = from_weight(r.lambda);
      row["r"] = r.target.r;
      row["s"] = r.target.s;
      row["terms"] = r.terms;
      row["match"] = r.match;
      row["zero_elsewhere"] = r.zero_elsewhere;
      row["orbit_ok"] = r.orbit_ok;
      rows.append(row);
    }
    return py::make_tuple(report.all_passed, rows);
  }, py::arg("max_n"), py::arg("max_abs") = "13/2", py::arg("jobs") = 1,
     "(all_passed, rows) for the exhaustive sweep");

  m.def("omega_constant", [](std::size_t samples, std::uint64_t seed) {
    return chc::omega_survey(samples, seed).min_constant;
  }, py::arg("samples") = 1000, py::arg("seed") = 20240917);
}
