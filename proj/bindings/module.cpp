#include <pybind11/complex.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "vortexwave/hilbert.hpp"
#include "vortexwave/io.hpp"
#include "vortexwave/solution.hpp"
#include "vortexwave/specfun.hpp"
#include "vortexwave/verify.hpp"

namespace py = pybind11;

using vortexwave::hilbert::Catalog;
using vortexwave::hilbert::TailModel;
using vortexwave::solution::FroudeContext;
using vortexwave::solution::Method;

namespace {

Catalog parse_catalog(const std::string& tag) {
  if (tag == "lorentzian") return Catalog::lorentzian;
  if (tag == "f_paper") return Catalog::f_paper;
  if (tag == "hf_paper") return Catalog::hf_paper;
  if (tag == "hf_prime_paper") return Catalog::hf_prime_paper;
  if (tag == "cosine") return Catalog::cosine;
  if (tag == "sine") return Catalog::sine;
  throw std::domain_error("unknown catalog tag: " + tag);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() =
      "Analytical and numerical solution of u + F^2 H u' = 1/(pi(x^2+1)) "
      "for linear surface waves over a vortex";

  py::register_exception<vortexwave::accuracy_error>(m, "AccuracyError",
                                                     PyExc_ArithmeticError);

  // special functions
  m.def("si", [](std::complex<double> z) {
    return vortexwave::specfun::sine_integral(z);
  }, py::arg("z"), "Sine integral Si(z)");
  m.def("ci", [](std::complex<double> z) {
    return vortexwave::specfun::cosine_integral(z);
  }, py::arg("z"), "Cosine integral Ci(z), principal branch");
  m.def("si_small", [](std::complex<double> z) {
    return vortexwave::specfun::sine_integral_small(z);
  }, py::arg("z"), "si(z) = Si(z) - pi/2");
  m.def("ei", &vortexwave::specfun::exp_integral_ei, py::arg("x"),
        "Exponential integral Ei(x), x > 0");
  m.def("ei_scaled", &vortexwave::specfun::exp_integral_ei_scaled,
        py::arg("x"), "e^{-x} Ei(x)");
  m.def("aux_fg", [](std::complex<double> z) {
    const auto a = vortexwave::specfun::aux_fg(z);
    return py::make_tuple(a.f, a.g);
  }, py::arg("z"), "Auxiliary pair (f(z), g(z))");

  // Hilbert services
  m.def("catalog_value", [](const std::string& tag, double x) {
    return vortexwave::hilbert::catalog_value(parse_catalog(tag), x);
  }, py::arg("tag"), py::arg("x"));
  m.def("catalog_transform", [](const std::string& tag, double x) {
    return vortexwave::hilbert::catalog_transform(parse_catalog(tag), x);
  }, py::arg("tag"), py::arg("x"));

  py::class_<TailModel>(m, "TailModel")
      .def(py::init([](double amplitude, double omega, double phase,
                       double start, bool symmetric) {
             return TailModel{amplitude, omega, phase, start, symmetric};
           }),
           py::arg("amplitude"), py::arg("omega"), py::arg("phase"),
           py::arg("start"), py::arg("symmetric") = false)
      .def_readwrite("amplitude", &TailModel::amplitude)
      .def_readwrite("omega", &TailModel::omega)
      .def_readwrite("phase", &TailModel::phase)
      .def_readwrite("start", &TailModel::start)
      .def_readwrite("symmetric", &TailModel::symmetric);

  m.def("hilbert_numeric",
        [](const std::function<double(double)>& g, double x, double trunc,
           std::optional<TailModel> tail) {
          return vortexwave::hilbert::hilbert_numeric(g, x, trunc, tail);
        },
        py::arg("g"), py::arg("x"), py::arg("trunc"),
        py::arg("tail") = std::nullopt,
        "Numerical principal-value Hilbert transform");
  m.def("convolution_identity_residual", [](double x) {
    return vortexwave::hilbert::convolution_identity_residual(x);
  }, py::arg("x"));

  // solution evaluators
  py::class_<FroudeContext>(m, "FroudeContext")
      .def(py::init<double>(), py::arg("froude"))
      .def_readonly("froude", &FroudeContext::froude)
      .def_readonly("wavenumber", &FroudeContext::wavenumber)
      .def_readonly("decay", &FroudeContext::decay);

  m.def("u_closed_form", [](double x, double froude) {
    return vortexwave::solution::u_closed_form(x, FroudeContext(froude));
  }, py::arg("x"), py::arg("froude"));
  m.def("u_quadrature", [](double x, double froude) {
    return vortexwave::solution::u_quadrature(x, FroudeContext(froude));
  }, py::arg("x"), py::arg("froude"));
  m.def("u_vp_oracle", [](double x, double froude) {
    return vortexwave::solution::u_vp_oracle(x, FroudeContext(froude));
  }, py::arg("x"), py::arg("froude"));
  m.def("u_asymptotic", [](double x, double froude) {
    return vortexwave::solution::u_asymptotic(x, FroudeContext(froude));
  }, py::arg("x"), py::arg("froude"));
  m.def("u_origin", [](double froude) {
    const auto v = vortexwave::solution::u_origin(FroudeContext(froude));
    return py::make_tuple(v.u0, v.du0);
  }, py::arg("froude"), "(u(0), u'(0))");

  m.def("surface_profile",
        [](const std::vector<double>& xs, double froude, double epsilon,
           const std::string& method) {
          const auto series = vortexwave::solution::surface_profile(
              xs, FroudeContext(froude), epsilon,
              vortexwave::solution::parse_method(method));
          py::list rows;
          for (const auto& s : series.samples)
            rows.append(py::make_tuple(s.x, s.u, s.s));
          return rows;
        },
        py::arg("xs"), py::arg("froude"), py::arg("epsilon") = 1.0,
        py::arg("method") = "closed_form",
        "Sampled (x, u, S) rows with S = -epsilon F^2 u");

  // verification
  m.def("ide_residual", [](double froude, const std::vector<double>& xs,
                           double trunc) {
    return vortexwave::verify::ide_residual(FroudeContext(froude), xs, trunc);
  }, py::arg("froude"), py::arg("xs"), py::arg("trunc") = 400.0);
  m.def("ode_residual", [](double froude, const std::vector<double>& xs) {
    return vortexwave::verify::ode_residual(FroudeContext(froude), xs);
  }, py::arg("froude"), py::arg("xs"));
  m.def("full_report", [](double froude) {
    const auto rep = vortexwave::verify::full_report(FroudeContext(froude));
    py::dict d;
    d["ide_residual_max"] = rep.ide_residual_max;
    d["ode_residual_max"] = rep.ode_residual_max;
    d["boundary_value"] = rep.boundary_value;
    d["asymptotic_ratios"] = rep.asymptotic_ratios;
    d["tolerances"] = rep.tolerances;
    d["passed"] = rep.passed;
    if (!rep.failure.empty()) d["failure"] = rep.failure;
    return d;
  }, py::arg("froude"));
  m.def("report_text", [](double froude) {
    return vortexwave::verify::to_key_value(
        vortexwave::verify::full_report(FroudeContext(froude)));
  }, py::arg("froude"));

  m.attr("__version__") = "0.1.0";
}
