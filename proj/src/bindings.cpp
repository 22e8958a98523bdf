#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "popuc/families.hpp"
#include "popuc/monotone.hpp"
#include "popuc/tridiag.hpp"

namespace py = pybind11;
using namespace popuc;

namespace {

schur::SchurParameters make_params(const std::vector<Complex>& alphas, Complex tau) {
  schur::SchurParameters p;
  p.alphas = alphas;
  p.tau = tau;
  p.validate();
  return p;
}

monotone::ParameterFamily family_by_name(const std::string& name, int n, double a) {
  if (name == "table1") return families::table1_family(n);
  if (name == "hypergeom") return families::hypergeometric_family(a, n);
  if (name.rfind("file:", 0) == 0) return families::tabulated_family(name.substr(5));
  throw InputError("unknown family '" + name + "'");
}

}  // namespace

PYBIND11_MODULE(_popuc, m) {
  m.doc() = "zeros of paraorthogonal polynomials on the unit circle and their monotone motion";

  py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
  py::register_exception<FamilyError>(m, "FamilyError", PyExc_RuntimeError);
  py::register_exception<TrackingFault>(m, "TrackingFault", PyExc_RuntimeError);
  py::register_exception<NumericsFault>(m, "NumericsFault", PyExc_ArithmeticError);

  m.def(
      "build_hessenberg",
      [](const std::vector<Complex>& alphas, Complex tau) {
        return schur::build_hessenberg(make_params(alphas, tau)).matrix;
      },
      py::arg("alphas"), py::arg("tau"),
      "Unitary upper Hessenberg matrix from Schur parameters.");

  m.def(
      "recover_parameters",
      [](const Matrix& M) {
        auto p = schur::recover_parameters(M);
        return py::make_tuple(p.alphas, p.tau);
      },
      py::arg("matrix"), "Schur parameters (alphas, tau) of a unitary Hessenberg matrix.");

  m.def(
      "popuc_zeros",
      [](const std::vector<Complex>& alphas, Complex tau) {
        auto z = schur::popuc_zeros(make_params(alphas, tau));
        return py::make_tuple(z.angles, z.eigenvalues);
      },
      py::arg("alphas"), py::arg("tau"),
      "POPUC zeros as (angles in (0, 2pi], eigenvalues), ascending by angle.");

  m.def(
      "popuc_eval",
      [](const std::vector<Complex>& alphas, Complex tau, Complex z) {
        return schur::popuc_eval(make_params(alphas, tau), z);
      },
      py::arg("alphas"), py::arg("tau"), py::arg("z"), "P_{n+1}(z) = det(zI - G).");

  m.def(
      "default_zeta",
      [](const std::vector<Complex>& alphas, Complex tau) {
        return tridiag::default_zeta(make_params(alphas, tau));
      },
      py::arg("alphas"), py::arg("tau"), "Midpoint of the largest spectral gap.");

  m.def(
      "beta_sequence",
      [](const std::vector<Complex>& alphas, Complex tau, Complex zeta) {
        return tridiag::beta_from_charpoly(make_params(alphas, tau), zeta).values;
      },
      py::arg("alphas"), py::arg("tau"), py::arg("zeta"),
      "Recurrence coefficients beta_0(zeta)..beta_n(zeta).");

  m.def(
      "assemble_system",
      [](const std::vector<Complex>& alphas, Complex tau, Complex zeta) {
        auto sys = tridiag::assemble_system(
            tridiag::beta_from_charpoly(make_params(alphas, tau), zeta));
        py::dict d;
        d["A"] = sys.A;
        d["H"] = sys.H;
        d["K"] = sys.K;
        d["beta"] = sys.beta.values;
        d["zeta"] = sys.beta.zeta;
        return d;
      },
      py::arg("alphas"), py::arg("tau"), py::arg("zeta"),
      "Strictly dissipative system A = H + iK with H > O.");

  m.def("cayley_transform", &tridiag::cayley_transform, py::arg("A"), "U = A^{-1} A*.");

  m.def(
      "cot_identity_residual",
      [](const std::vector<Complex>& alphas, Complex tau, Complex zeta, Complex eta) {
        auto sys = tridiag::assemble_system(
            tridiag::beta_from_charpoly(make_params(alphas, tau), zeta));
        return tridiag::cot_identity_residual(sys, eta);
      },
      py::arg("alphas"), py::arg("tau"), py::arg("zeta"), py::arg("eta"));

  m.def(
      "family_angles",
      [](const std::string& family, double t, int n, double a) {
        return monotone::family_angles(family_by_name(family, n, a), t);
      },
      py::arg("family"), py::arg("t"), py::arg("n") = 5, py::arg("a") = 1.0,
      "Sorted eigenangles of the tracked unitary at parameter t.");

  m.def(
      "classify",
      [](const std::string& family, double t, int n, double a) {
        auto fam = family_by_name(family, n, a);
        std::vector<double> probe{t};
        monotone::ensure_zeta(fam, probe);
        auto pc = monotone::classify_point(fam, t, monotone::default_step(t));
        py::dict d;
        d["t"] = pc.t;
        d["label"] = pc.label;
        d["predicted"] = monotone::motion_name(pc.predicted);
        return d;
      },
      py::arg("family"), py::arg("t"), py::arg("n") = 5, py::arg("a") = 1.0,
      "Point classification and predicted motion at t.");

  m.def(
      "track",
      [](const std::string& family, const std::vector<double>& grid, int n, double a) {
        auto fam = family_by_name(family, n, a);
        monotone::ensure_zeta(fam, grid);
        auto path = monotone::track_eigenangles(fam, grid);
        py::dict d;
        d["grid"] = path.grid;
        d["wrapped"] = path.wrapped;
        d["unwrapped"] = path.unwrapped;
        return d;
      },
      py::arg("family"), py::arg("grid"), py::arg("n") = 5, py::arg("a") = 1.0,
      "Continuously tracked eigenangle paths over the grid.");

  m.def(
      "scan_intervals",
      [](const std::string& family, const std::vector<double>& grid, int n, double a) {
        auto rep = monotone::scan_intervals(family_by_name(family, n, a), grid);
        py::list intervals;
        for (const auto& iv : rep.intervals) {
          py::dict d;
          d["t_lo"] = iv.t_lo;
          d["t_hi"] = iv.t_hi;
          d["label"] = iv.label;
          d["predicted"] = monotone::motion_name(iv.predicted);
          d["observed"] = monotone::motion_name(iv.observed);
          d["agree"] = iv.agree;
          intervals.append(d);
        }
        return intervals;
      },
      py::arg("family"), py::arg("grid"), py::arg("n") = 5, py::arg("a") = 1.0,
      "Constant-classification intervals with predicted vs observed motion.");

  m.def(
      "random_parameters",
      [](int n, std::uint64_t seed) {
        auto p = schur::random_parameters(n, seed);
        return py::make_tuple(p.alphas, p.tau);
      },
      py::arg("n"), py::arg("seed"), "Deterministic random Schur parameters.");

  m.def("hypergeometric_zeros", &families::hypergeometric_zeros, py::arg("a"), py::arg("b"),
        py::arg("degree"), "Zeros of r_m from the three-term recurrence.");
}
