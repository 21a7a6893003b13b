#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "hypheat/errors.hpp"
#include "hypheat/estimates.hpp"
#include "hypheat/geometry.hpp"
#include "hypheat/kernel.hpp"
#include "hypheat/report_json.hpp"
#include "hypheat/series.hpp"
#include "hypheat/special.hpp"
#include "hypheat/verify.hpp"

namespace py = pybind11;
using namespace hypheat;

namespace {

EstimateId make_estimate(const std::string& name, int dim, double alpha, std::optional<double> k,
                         double r0, double beta, bool odd_constant) {
  EstimateParams p;
  p.dim = dim;
  p.alpha = alpha;
  p.k = k;
  p.r0 = r0;
  p.beta = beta;
  p.odd_constant = odd_constant;
  return estimate_from_name(name, p);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Heat kernels on hyperbolic space and Li-Yau type gradient estimates";

  py::register_exception<UsageError>(m, "UsageError", PyExc_ValueError);
  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<NumericalAccuracyError>(m, "NumericalAccuracyError", PyExc_ArithmeticError);
  py::register_exception<VerificationFailure>(m, "VerificationFailure", PyExc_AssertionError);

  py::class_<HyperPoint>(m, "HyperPoint")
      .def(py::init<std::vector<double>, double>(), py::arg("coords"), py::arg("tolerance") = 1e-8)
      .def_static("origin", &HyperPoint::origin, py::arg("dim"))
      .def_static("from_polar",
                  [](const std::vector<double>& d, double r) { return HyperPoint::from_polar(d, r); },
                  py::arg("direction"), py::arg("radius"))
      .def_property_readonly("dim", &HyperPoint::dim)
      .def_property_readonly("coords", [](const HyperPoint& p) {
        return std::vector<double>(p.coords().begin(), p.coords().end());
      });

  m.def("distance", &distance, py::arg("x"), py::arg("y"));
  m.def("random_point",
        py::overload_cast<int, double, std::uint64_t>(&random_point),
        py::arg("dim"), py::arg("radius_bound"), py::arg("seed"));

  m.def("z_function", &z_function, py::arg("r"));
  m.def("z_derivative", &z_derivative, py::arg("r"));
  m.def("z_second_derivative", &z_second_derivative, py::arg("r"));

  py::class_<KernelEval>(m, "KernelEval")
      .def_readonly("dim", &KernelEval::dim)
      .def_readonly("t", &KernelEval::t)
      .def_readonly("r", &KernelEval::r)
      .def_readonly("log_k", &KernelEval::log_k)
      .def_readonly("dr_log_k", &KernelEval::dr_log_k)
      .def_readonly("dt_log_k", &KernelEval::dt_log_k)
      .def_property_readonly("method",
                             [](const KernelEval& k) { return std::string(to_string(k.method)); });
  py::class_<AlphaEval>(m, "AlphaEval")
      .def_readonly("alpha", &AlphaEval::alpha)
      .def_readonly("log_alpha", &AlphaEval::log_alpha)
      .def_readonly("dr_log_alpha", &AlphaEval::dr_log_alpha)
      .def_readonly("dt_log_alpha", &AlphaEval::dt_log_alpha);

  m.def("kernel", &kernel, py::arg("n"), py::arg("t"), py::arg("r"));
  m.def("alpha_profile", &alpha_profile, py::arg("n"), py::arg("t"), py::arg("r"));

  py::class_<SolutionSample>(m, "SolutionSample")
      .def(py::init([](double t, double grad_sq, double dt_log, int dim) {
             return SolutionSample{t, grad_sq, dt_log, dim};
           }),
           py::arg("t"), py::arg("grad_sq"), py::arg("dt_log"), py::arg("dim"))
      .def_readonly("t", &SolutionSample::t)
      .def_readonly("grad_sq", &SolutionSample::grad_sq)
      .def_readonly("dt_log", &SolutionSample::dt_log)
      .def_readonly("dim", &SolutionSample::dim);

  py::class_<CheckOutcome>(m, "CheckOutcome")
      .def_readonly("holds", &CheckOutcome::holds)
      .def_readonly("slack", &CheckOutcome::slack)
      .def_readonly("rhs", &CheckOutcome::rhs)
      .def_property_readonly("estimate",
                             [](const CheckOutcome& o) { return estimate_name(o.estimate); });

  m.def(
      "check_estimate",
      [](const std::string& name, const SolutionSample& s, double tol, double alpha,
         std::optional<double> k, double r0, double beta, bool odd_constant) {
        return check_estimate(make_estimate(name, s.dim, alpha, k, r0, beta, odd_constant), s, tol);
      },
      py::arg("name"), py::arg("sample"), py::arg("tol") = 1e-8, py::arg("alpha") = 2.0,
      py::arg("k") = py::none(), py::arg("r0") = 0.0, py::arg("beta") = 0.0,
      py::arg("odd_constant") = false);
  m.def("estimate_names", &estimate_names);
  m.def("sharp_h3_bound", &sharp_h3_bound, py::arg("t"), py::arg("dt_log"),
        py::arg("radicand_tol") = 1e-12);
  m.def("general_h_bound", &general_h_bound, py::arg("n"), py::arg("t"), py::arg("dt_log"),
        py::arg("radicand_tol") = 1e-12);
  m.def("harnack_factor", &harnack_factor, py::arg("n"), py::arg("t1"), py::arg("t2"),
        py::arg("r"));

  // Reports cross the boundary as JSON text; the Python package parses them.
  m.def(
      "grid_scan_json",
      [](const std::string& name, std::vector<int> dims, double tol, double alpha,
         std::optional<double> k, double r0, double beta, bool odd_constant) {
        const EstimateId id = make_estimate(name, dims.front(), alpha, k, r0, beta, odd_constant);
        py::gil_scoped_release release;
        return to_json(run_grid_scan(id, default_grid(std::move(dims)), tol)).dump();
      },
      py::arg("name"), py::arg("dims"), py::arg("tol") = 1e-8, py::arg("alpha") = 2.0,
      py::arg("k") = py::none(), py::arg("r0") = 0.0, py::arg("beta") = 0.0,
      py::arg("odd_constant") = false);
  m.def(
      "superposition_suite_json",
      [](const std::string& name, int dim, long trials, std::uint64_t seed, double tol,
         double alpha, std::optional<double> k, double r0, double beta, bool odd_constant) {
        const EstimateId id = make_estimate(name, dim, alpha, k, r0, beta, odd_constant);
        py::gil_scoped_release release;
        return to_json(run_superposition_suite(id, dim, trials, seed, tol)).dump();
      },
      py::arg("name"), py::arg("dim"), py::arg("trials") = 1000, py::arg("seed") = 0,
      py::arg("tol") = 1e-8, py::arg("alpha") = 2.0, py::arg("k") = py::none(),
      py::arg("r0") = 0.0, py::arg("beta") = 0.0, py::arg("odd_constant") = false);
  m.def(
      "harnack_suite_json",
      [](int dim, long trials, std::uint64_t seed, double tol) {
        py::gil_scoped_release release;
        return to_json(run_harnack_suite(dim, trials, seed, tol)).dump();
      },
      py::arg("dim"), py::arg("trials") = 1000, py::arg("seed") = 0, py::arg("tol") = 1e-8);
  m.def(
      "series_json",
      [](const std::string& which, int order) {
        py::gil_scoped_release release;
        if (which == "first") return to_json(verify_first_sign_argument(order)).dump();
        if (which == "second") return to_json(verify_second_sign_argument(order)).dump();
        if (which == "dominance") return to_json(verify_dominance_inequalities(order / 2)).dump();
        throw UsageError("series: expected first, second or dominance");
      },
      py::arg("which"), py::arg("order") = 400);
  m.def(
      "concavity_json",
      [](std::vector<double> t_values, std::size_t s_grid) {
        py::gil_scoped_release release;
        return to_json(run_concavity_scan(t_values, s_grid)).dump();
      },
      py::arg("t_values"), py::arg("s_grid_size") = 200);
  m.def(
      "comparison_csv",
      [](std::vector<int> dims) {
        py::gil_scoped_release release;
        return to_csv(run_comparison_report(default_grid(std::move(dims))));
      },
      py::arg("dims"));
}
