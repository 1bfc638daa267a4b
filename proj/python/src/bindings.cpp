#include <pybind11/eigen.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "cheb2d/darboux.hpp"
#include "cheb2d/errors.hpp"
#include "cheb2d/json_io.hpp"
#include "cheb2d/measures.hpp"
#include "cheb2d/oracle.hpp"
#include "cheb2d/scattering.hpp"
#include "cheb2d/verify.hpp"

namespace py = pybind11;
using namespace cheb2d;

namespace {

py::object to_python(const json& j) {
  return py::module_::import("json").attr("loads")(j.dump());
}

}  // namespace

PYBIND11_MODULE(_cheb2d, m) {
  m.doc() = "Bivariate deformations of the Chebyshev polynomials";

  // translators registered later are tried first, so subclasses go last
  auto& base = py::register_exception<Error>(m, "Cheb2dError");
  py::register_exception<NotPositiveDefinite>(m, "NotPositiveDefinite", base.ptr());
  py::register_exception<InvalidFamily>(m, "InvalidFamily", base.ptr());
  py::register_exception<LinkBroken>(m, "LinkBroken", base.ptr());

  py::class_<DeformationFamily>(m, "Family")
      .def_static("chebyshev", &DeformationFamily::chebyshev)
      .def_static("one_param", &DeformationFamily::one_param, py::arg("s11"))
      .def_static("two_param", &DeformationFamily::two_param, py::arg("s11"), py::arg("s10"))
      .def_static("parse", &DeformationFamily::parse, py::arg("name"), py::arg("s11") = 0.0,
                  py::arg("s10") = 1.0)
      .def_readonly("s11", &DeformationFamily::s11)
      .def_readonly("s10", &DeformationFamily::s10)
      .def_property_readonly("name", &DeformationFamily::name)
      .def("validate", &DeformationFamily::validate)
      .def("__repr__", [](const DeformationFamily& f) { return "<Family " + f.name() + ">"; });

  py::class_<JacobiOperator>(m, "JacobiOperator")
      .def_property_readonly("m", &JacobiOperator::m)
      .def_property_readonly("tail_index", &JacobiOperator::tail_index)
      .def_property_readonly("y_basis", &JacobiOperator::y_basis)
      .def("A", &JacobiOperator::A, py::arg("n"))
      .def("B", &JacobiOperator::B, py::arg("n"));

  m.def("jacobi_operator", &jacobi_operator, py::arg("family"), py::arg("m"));
  m.def("matrix_polys",
        py::overload_cast<const JacobiOperator&, int, double>(&eval_matrix_polys),
        py::arg("op"), py::arg("nmax"), py::arg("x"), "P_0..P_nmax at x");
  m.def("vector_poly",
        [](const JacobiOperator& op, int n, double x, double y) {
          return eval_vector_poly(op, n, x, y).value;
        },
        py::arg("op"), py::arg("n"), py::arg("x"), py::arg("y"));
  m.def("lex_step_coefficients",
        [](const DeformationFamily& f, int n, int mm) {
          const auto c = lex_step_coefficients(f, n, mm);
          return py::dict(py::arg("K") = c.K, py::arg("J1") = c.J1, py::arg("J2") = c.J2);
        },
        py::arg("family"), py::arg("n"), py::arg("m"));
  m.def("total_degree_coeffs",
        [](const DeformationFamily& f, int n) {
          const auto t = total_degree_coeffs(f, n);
          return py::dict(py::arg("Ax") = t.Ax, py::arg("Ay") = t.Ay, py::arg("Bx") = t.Bx,
                          py::arg("By") = t.By);
        },
        py::arg("family"), py::arg("n"));

  py::class_<BivariateMeasure>(m, "Measure")
      .def("ac_density", &BivariateMeasure::ac_density, py::arg("x"), py::arg("y"))
      .def("line_density", &BivariateMeasure::line_density, py::arg("line"), py::arg("y"))
      .def_property_readonly("lines", [](const BivariateMeasure& mu) {
        std::vector<double> x0;
        for (const auto& l : mu.lines) x0.push_back(l.x0);
        return x0;
      });
  m.def("measure", &measure_for_family, py::arg("family"));
  m.def("mu0", &mu0, py::arg("s11"), py::arg("x"), py::arg("y"));
  m.def("moments",
        [](const BivariateMeasure& mu, int imax, int jmax, int nodes, bool lines) {
          InnerProductOptions o;
          o.include_lines = lines;
          return moments(mu, imax, jmax, nodes, o);
        },
        py::arg("measure"), py::arg("imax"), py::arg("jmax"), py::arg("nodes") = 512,
        py::arg("include_lines") = true);
  m.def("matrix_measure_slice", &matrix_measure_slice, py::arg("measure"), py::arg("m"),
        py::arg("x"), py::arg("nodes") = 512);
  m.def("orthonormality_defect", &orthonormality_defect, py::arg("op"), py::arg("measure"),
        py::arg("nmax"), py::arg("nodes") = 512, py::arg("include_lines") = true);

  m.def("matrix_weight", py::overload_cast<const JacobiOperator&, double>(&matrix_weight),
        py::arg("op"), py::arg("x"));
  m.def("jost_fplus",
        [](const JacobiOperator& op, std::complex<double> z) { return jost_fplus(op).eval(z); },
        py::arg("op"), py::arg("z"));
  m.def("jost_zero_count",
        [](const JacobiOperator& op) { return check_assumtwo(jost_fplus(op), 32).zero_count; },
        py::arg("op"), "zeros of det(z f_+(z)) inside the unit disk");

  py::class_<DarbouxConfig>(m, "DarbouxConfig")
      .def_static("from_z0", &DarbouxConfig::from_z0, py::arg("z0"))
      .def_static("from_s10", &DarbouxConfig::from_s10, py::arg("s10"))
      .def_readonly("z0", &DarbouxConfig::z0)
      .def_readonly("x0", &DarbouxConfig::x0);
  m.def("hat_mass",
        [](const JacobiOperator& op, const DarbouxConfig& cfg) {
          const auto h = hat_measure(op, cfg);
          return py::make_tuple(h.mass, h.admissible);
        },
        py::arg("op"), py::arg("cfg"));
  m.def("hat_operator", &hat_operator, py::arg("op"), py::arg("cfg"), py::arg("nmax") = 10);
  m.def("factorization_defects",
        [](const JacobiOperator& op, const DarbouxConfig& cfg, int nmax, int trials,
           std::uint64_t seed) {
          const auto d = factorization_defects(op, cfg, nmax, trials, seed);
          return py::dict(py::arg("PQ") = d.pq, py::arg("QP") = d.qp, py::arg("tail") = d.tail);
        },
        py::arg("op"), py::arg("cfg"), py::arg("nmax") = 10, py::arg("trials") = 20,
        py::arg("seed") = 1);
  m.def("two_param_link",
        [](double s11, double s10, int mm, int nmax) {
          return two_param_link(s11, s10, mm, nmax).residuals;
        },
        py::arg("s11"), py::arg("s10"), py::arg("m"), py::arg("nmax") = 8);

  m.def("phi_identity_check",
        [](double s11, int mm, int count, std::uint64_t seed) {
          return phi_identity_check(s11, mm, phi_samples(count, seed));
        },
        py::arg("s11"), py::arg("m"), py::arg("count") = 100, py::arg("seed") = 1);
  m.def("verify",
        [](const DeformationFamily& f, int n, int mm, int nodes, double tol, std::uint64_t seed) {
          VerifyOptions o;
          o.n = n;
          o.m = mm;
          o.nodes = nodes;
          o.tol = tol;
          o.seed = seed;
          return to_python(report_to_json(run_verification(f, o)));
        },
        py::arg("family"), py::arg("n") = 3, py::arg("m") = 3, py::arg("nodes") = 512,
        py::arg("tol") = 1e-8, py::arg("seed") = 1);
}
