// Python bindings for the main operations: parameters, samplers, the Monte
// Carlo estimator and the analytic coverage pipeline.

#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "d2d/analytic.hpp"
#include "d2d/montecarlo.hpp"

namespace py = pybind11;
using namespace d2d;

namespace {

SimOptions make_options(const std::string& model, bool stp_shared_fading) {
  SimOptions opt;
  if (model == "ppp") {
    opt.model = PointProcessModel::Ppp;
  } else if (model == "alpha_gpp") {
    opt.model = PointProcessModel::AlphaGpp;
  } else {
    throw EvaluationError("unknown point process model '" + model + "'");
  }
  opt.stp_shared_fading = stp_shared_fading;
  return opt;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Hybrid backscatter / harvest-then-transmit D2D coverage core";

  py::register_exception<ValidationError>(m, "ValidationError", PyExc_ValueError);
  py::register_exception<ConfigError>(m, "ConfigError", PyExc_ValueError);

  py::class_<SystemParams>(m, "SystemParams")
      .def(py::init<>())
      .def_readwrite("p_a", &SystemParams::p_a)
      .def_readwrite("p_b", &SystemParams::p_b)
      .def_readwrite("zeta_a", &SystemParams::zeta_a)
      .def_readwrite("xi", &SystemParams::xi)
      .def_readwrite("l_a", &SystemParams::l_a)
      .def_readwrite("l_b", &SystemParams::l_b)
      .def_readwrite("alpha", &SystemParams::alpha)
      .def_readwrite("window_radius", &SystemParams::window_radius)
      .def_readwrite("mu", &SystemParams::mu)
      .def_readwrite("m", &SystemParams::m)
      .def_readwrite("d", &SystemParams::d)
      .def_readwrite("beta", &SystemParams::beta)
      .def_readwrite("eta", &SystemParams::eta)
      .def_readwrite("delta", &SystemParams::delta)
      .def_readwrite("omega", &SystemParams::omega)
      .def_readwrite("rho_b", &SystemParams::rho_b)
      .def_readwrite("rho_h", &SystemParams::rho_h)
      .def_readwrite("tau_b", &SystemParams::tau_b)
      .def_readwrite("tau_h", &SystemParams::tau_h)
      .def_readwrite("sigma2", &SystemParams::sigma2)
      .def_readwrite("t_b", &SystemParams::t_b)
      .def_property_readonly("zeta_b", &SystemParams::zeta_b)
      .def("__repr__", [](const SystemParams& p) {
        return "SystemParams(zeta_a=" + std::to_string(p.zeta_a) +
               ", xi=" + std::to_string(p.xi) +
               ", alpha=" + std::to_string(p.alpha) + ", ...)";
      });

  m.def("validate", &validate, py::arg("params"));
  m.def(
      "derived_thresholds",
      [](const SystemParams& p) {
        const Thresholds t = derived_thresholds(p);
        return py::make_tuple(t.pi_min_backscatter, t.pi_min_htt);
      },
      py::arg("params"),
      "(pi_min_backscatter, pi_min_htt) in watts");
  m.def("db_to_ratio", &db_to_ratio, py::arg("db"));
  m.def("dbm_to_watts", &dbm_to_watts, py::arg("dbm"));
  m.def("params_from_json_file", &params_from_json_file, py::arg("path"));

  m.def(
      "sample_ginibre_radii",
      [](double density, double window_radius, uint64_t seed) {
        return sample_ginibre_radii(density, window_radius, RngStream(seed)).radii;
      },
      py::arg("density"), py::arg("window_radius"), py::arg("seed"));
  m.def(
      "sample_alpha_gpp_radii",
      [](double density, double alpha, double window_radius, uint64_t seed) {
        return sample_alpha_gpp_radii(density, alpha, window_radius, RngStream(seed))
            .radii;
      },
      py::arg("density"), py::arg("alpha"), py::arg("window_radius"),
      py::arg("seed"));
  m.def(
      "sample_ppp_radii",
      [](double density, double window_radius, uint64_t seed) {
        return sample_ppp_radii(density, window_radius, RngStream(seed)).radii;
      },
      py::arg("density"), py::arg("window_radius"), py::arg("seed"));

  py::class_<TrialOutcome>(m, "TrialOutcome")
      .def_property_readonly("mode",
                             [](const TrialOutcome& t) { return to_string(t.mode); })
      .def_readonly("success", &TrialOutcome::success)
      .def_readonly("p_incident", &TrialOutcome::p_incident)
      .def_readonly("snr_or_sinr", &TrialOutcome::snr_or_sinr);

  m.def(
      "simulate_trial",
      [](const SystemParams& p, const std::string& protocol, uint64_t seed,
         uint64_t trial, const std::string& model, bool stp_shared_fading) {
        return simulate_trial(p, protocol_from_string(protocol),
                              make_options(model, stp_shared_fading), seed, trial);
      },
      py::arg("params"), py::arg("protocol"), py::arg("seed"), py::arg("trial") = 0,
      py::arg("model") = "alpha_gpp", py::arg("stp_shared_fading") = false);

  py::class_<CoverageEstimate>(m, "CoverageEstimate")
      .def_readonly("coverage", &CoverageEstimate::coverage)
      .def_readonly("std_err", &CoverageEstimate::std_err)
      .def_readonly("n_trials", &CoverageEstimate::n_trials)
      .def_readonly("mean_conditional_snr", &CoverageEstimate::mean_conditional_snr)
      .def_property_readonly("mode_fractions", [](const CoverageEstimate& e) {
        py::dict d;
        d["backscatter"] = e.mode_fractions.backscatter;
        d["htt"] = e.mode_fractions.htt;
        d["energy_outage"] = e.mode_fractions.energy_outage;
        return d;
      });

  m.def(
      "estimate_coverage",
      [](const SystemParams& p, const std::string& protocol, uint64_t trials,
         uint64_t seed, int threads, const std::string& model,
         bool stp_shared_fading) {
        return estimate_coverage(p, protocol_from_string(protocol),
                                 make_options(model, stp_shared_fading), trials,
                                 seed, threads);
      },
      py::arg("params"), py::arg("protocol"), py::arg("trials"), py::arg("seed"),
      py::arg("threads") = 0, py::arg("model") = "alpha_gpp",
      py::arg("stp_shared_fading") = false,
      py::call_guard<py::gil_scoped_release>());

  m.def(
      "sample_incident_power",
      [](const SystemParams& p, uint64_t n, uint64_t seed, int threads,
         const std::string& model) {
        return sample_incident_power(p, make_options(model, false), n, seed,
                                     threads);
      },
      py::arg("params"), py::arg("n"), py::arg("seed"), py::arg("threads") = 0,
      py::arg("model") = "alpha_gpp", py::call_guard<py::gil_scoped_release>());

  py::class_<CoverageBreakdown>(m, "CoverageBreakdown")
      .def_readonly("thr_backscatter", &CoverageBreakdown::thr_backscatter)
      .def_readonly("thr_htt", &CoverageBreakdown::thr_htt)
      .def_readonly("rho_max", &CoverageBreakdown::rho_max)
      .def_readonly("b_ptp", &CoverageBreakdown::b_ptp)
      .def_readonly("c_backscatter", &CoverageBreakdown::c_backscatter)
      .def_readonly("c_htt", &CoverageBreakdown::c_htt)
      .def_readonly("c_ptp", &CoverageBreakdown::c_ptp)
      .def_readonly("c_ptp_published", &CoverageBreakdown::c_ptp_published)
      .def_readonly("ptp_composition_gap", &CoverageBreakdown::ptp_composition_gap)
      .def_readonly("c_stp_composed", &CoverageBreakdown::c_stp_composed)
      .def_readonly("c_stp_printed", &CoverageBreakdown::c_stp_printed)
      .def_readonly("stp_variant_gap", &CoverageBreakdown::stp_variant_gap)
      .def_readonly("quadrature_converged",
                    &CoverageBreakdown::quadrature_converged);

  py::class_<CoverageEvaluator>(m, "CoverageEvaluator")
      .def(py::init<const SystemParams&, int>(), py::arg("params"),
           py::arg("threads") = 1)
      .def("breakdown",
           [](CoverageEvaluator& e) { return e.evaluate(); },
           py::call_guard<py::gil_scoped_release>(),
           py::return_value_policy::copy)
      .def("coverage",
           [](CoverageEvaluator& e, const std::string& protocol,
              const std::string& variant) {
             return e.coverage_for(protocol_from_string(protocol),
                                   stp_variant_from_string(variant));
           },
           py::arg("protocol"), py::arg("stp_variant") = "composed",
           py::call_guard<py::gil_scoped_release>());

  m.def(
      "laplace_pi",
      [](std::complex<double> s, const SystemParams& p) { return laplace_pi(s, p); },
      py::arg("s"), py::arg("params"));
  m.def("cdf_pi", &cdf_pi, py::arg("rho"), py::arg("params"),
        py::call_guard<py::gil_scoped_release>());
  m.def("pdf_pi", &pdf_pi, py::arg("rho"), py::arg("params"),
        py::call_guard<py::gil_scoped_release>());
  m.def("ppp_laplace_pi", &ppp_laplace_pi, py::arg("s"), py::arg("params"));

  m.attr("__all__") = py::make_tuple(
      "SystemParams", "validate", "derived_thresholds", "db_to_ratio",
      "dbm_to_watts", "params_from_json_file", "sample_ginibre_radii",
      "sample_alpha_gpp_radii", "sample_ppp_radii", "TrialOutcome",
      "simulate_trial", "CoverageEstimate", "estimate_coverage",
      "sample_incident_power", "CoverageBreakdown", "CoverageEvaluator",
      "laplace_pi", "cdf_pi", "pdf_pi", "ppp_laplace_pi", "ValidationError",
      "ConfigError");
}
