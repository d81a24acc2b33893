// SPDX-License-Identifier: Apache-2.0
#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "qillum/discrimination.hpp"
#include "qillum/imaging.hpp"
#include "qillum/montecarlo.hpp"
#include "qillum/scenarios.hpp"
#include "qillum/version.hpp"

namespace py = pybind11;
using namespace qillum;

PYBIND11_MODULE(_qillum, m) {
  m.doc() = "quantum illumination toolkit";
  m.attr("__version__") = kVersion;

  py::register_exception<Error>(m, "QillumError", PyExc_RuntimeError);

  py::enum_<Kind>(m, "Kind")
      .value("Unentangled", Kind::Unentangled)
      .value("Entangled", Kind::Entangled);
  py::enum_<Truth>(m, "Truth")
      .value("Absent", Truth::Absent)
      .value("Present", Truth::Present);
  py::enum_<Decision>(m, "Decision")
      .value("Absent", Decision::Absent)
      .value("Present", Decision::Present)
      .value("Undecided", Decision::Undecided);
  py::enum_<StopRule>(m, "StopRule")
      .value("Sequential", StopRule::Sequential)
      .value("FirstPhoton", StopRule::FirstPhoton);
  py::enum_<Regime>(m, "Regime")
      .value("Good", Regime::Good)
      .value("Bad", Regime::Bad);

  py::class_<ScenarioParams>(m, "ScenarioParams")
      .def(py::init([](double eta, double b, int d, double prior0) {
             ScenarioParams p;
             p.reflectivity = eta;
             p.thermal_weight = b;
             p.mode_count = d;
             p.prior_absent = prior0;
             p.validate();
             return p;
           }),
           py::arg("eta"), py::arg("b"), py::arg("d") = 1,
           py::arg("prior0") = 0.5)
      .def_readwrite("reflectivity", &ScenarioParams::reflectivity)
      .def_readwrite("thermal_weight", &ScenarioParams::thermal_weight)
      .def_readwrite("mode_count", &ScenarioParams::mode_count)
      .def_readwrite("prior_absent", &ScenarioParams::prior_absent);

  py::class_<SignalSpec>(m, "SignalSpec")
      .def(py::init<Eigen::VectorXcd>(), py::arg("amplitudes"))
      .def_static("uniform", &SignalSpec::uniform, py::arg("mode_count"))
      .def_property_readonly("amplitudes", &SignalSpec::amplitudes);

  py::class_<DensityMatrix>(m, "DensityMatrix")
      .def_property_readonly("dim", &DensityMatrix::dim)
      .def_property_readonly(
          "entries", [](const DensityMatrix& d) { return d.entries(); });

  py::class_<HypothesisPair>(m, "HypothesisPair")
      .def_readonly("absent", &HypothesisPair::absent)
      .def_readonly("present", &HypothesisPair::present)
      .def_readonly("kind", &HypothesisPair::kind);

  m.def("unentangled_pair", &unentangled_pair, py::arg("params"), py::arg("psi"));
  m.def("entangled_pair", &entangled_pair, py::arg("params"),
        py::arg("dimension_cap") = kDefaultDimensionCap);
  m.def("exact_thermal", &exact_thermal, py::arg("thermal_weight"),
        py::arg("mode_count"), py::arg("max_occupation"),
        py::arg("dimension_cap") = kDefaultDimensionCap);
  m.def("approximation_gap", &approximation_gap, py::arg("params"),
        py::arg("max_occupation"));
  m.def("ebits", &ebits, py::arg("mode_count"));
  m.def("thermal_mode_weight", &thermal_mode_weight, py::arg("energy_ratio"));
  m.def("trace_distance", &trace_distance, py::arg("a"), py::arg("b"));

  py::class_<HelstromResult>(m, "HelstromResult")
      .def_readonly("p_error", &HelstromResult::p_error)
      .def_property_readonly("measurement", [](const HelstromResult& r) {
        return r.measurement.entries();
      });
  py::class_<ChernoffResult>(m, "ChernoffResult")
      .def_readonly("q", &ChernoffResult::q)
      .def_readonly("s_star", &ChernoffResult::s_star)
      .def_readonly("exponent", &ChernoffResult::exponent);
  py::class_<TrialOutcomeModel>(m, "TrialOutcomeModel")
      .def(py::init([](double p_absent, double p_present, Kind kind) {
             return TrialOutcomeModel{p_absent, p_present, kind};
           }),
           py::arg("p_yes_given_absent"), py::arg("p_yes_given_present"),
           py::arg("kind") = Kind::Unentangled)
      .def_readonly("p_yes_given_absent", &TrialOutcomeModel::p_yes_given_absent)
      .def_readonly("p_yes_given_present", &TrialOutcomeModel::p_yes_given_present)
      .def_readonly("kind", &TrialOutcomeModel::kind);
  py::class_<RegimeLabel>(m, "RegimeLabel")
      .def_readonly("value", &RegimeLabel::value)
      .def_readonly("ratio", &RegimeLabel::ratio);

  m.def("helstrom", &helstrom, py::arg("pair"), py::arg("prior_absent") = 0.5,
        py::arg("prior_present") = 0.5);
  m.def("chernoff_overlap", &chernoff_overlap, py::arg("absent"),
        py::arg("present"), py::arg("s"));
  m.def("chernoff_numeric", &chernoff_numeric, py::arg("pair"));
  m.def("chernoff_analytic_unentangled", &chernoff_analytic_unentangled,
        py::arg("reflectivity"), py::arg("thermal_weight"));
  m.def("chernoff_analytic_entangled", &chernoff_analytic_entangled,
        py::arg("reflectivity"), py::arg("thermal_weight"), py::arg("mode_count"));
  m.def("classify_regime", &classify_regime, py::arg("reflectivity"),
        py::arg("thermal_weight"), py::arg("mode_count"), py::arg("kind"));
  m.def("conditional_probs", &conditional_probs, py::arg("params"), py::arg("kind"));
  m.def("classical_chernoff_bernoulli", &classical_chernoff_bernoulli,
        py::arg("model"));
  m.def("trials_needed", &trials_needed, py::arg("q"), py::arg("epsilon"));

  py::class_<TrialConfig>(m, "TrialConfig")
      .def(py::init([](std::uint64_t seed, double alpha, double beta,
                       int max_shots, int replicas) {
             TrialConfig c;
             c.seed = seed;
             c.alpha = alpha;
             c.beta = beta;
             c.max_shots = max_shots;
             c.replicas = replicas;
             c.validate();
             return c;
           }),
           py::arg("seed"), py::arg("alpha") = 0.01, py::arg("beta") = 0.01,
           py::arg("max_shots") = 1000000, py::arg("replicas") = 1)
      .def_readwrite("seed", &TrialConfig::seed)
      .def_readwrite("alpha", &TrialConfig::alpha)
      .def_readwrite("beta", &TrialConfig::beta)
      .def_readwrite("max_shots", &TrialConfig::max_shots)
      .def_readwrite("replicas", &TrialConfig::replicas);
  py::class_<TrialResult>(m, "TrialResult")
      .def_readonly("decision", &TrialResult::decision)
      .def_readonly("shots_used", &TrialResult::shots_used)
      .def_readonly("yes_count", &TrialResult::yes_count);
  py::class_<CampaignSummary>(m, "CampaignSummary")
      .def_readonly("mean_shots", &CampaignSummary::mean_shots)
      .def_readonly("ci95_halfwidth", &CampaignSummary::ci95_halfwidth)
      .def_readonly("error_rate", &CampaignSummary::error_rate)
      .def_readonly("replicas", &CampaignSummary::replicas)
      .def_readonly("undecided", &CampaignSummary::undecided);

  m.def("run_sprt",
        py::overload_cast<const TrialOutcomeModel&, Truth, const TrialConfig&>(
            &run_sprt),
        py::arg("model"), py::arg("truth"), py::arg("config"));
  m.def("run_first_photon",
        py::overload_cast<const TrialOutcomeModel&, Truth, const TrialConfig&>(
            &run_first_photon),
        py::arg("model"), py::arg("truth"), py::arg("config"));
  m.def("campaign", &campaign, py::arg("model"), py::arg("truth"),
        py::arg("config"), py::arg("rule") = StopRule::Sequential,
        py::call_guard<py::gil_scoped_release>());

  py::class_<ReflectivityMap>(m, "ReflectivityMap")
      .def(py::init([](int width, int height, std::vector<double> values) {
             ReflectivityMap map{width, height, std::move(values)};
             map.validate();
             return map;
           }),
           py::arg("width"), py::arg("height"), py::arg("values"))
      .def_static("checkerboard", &ReflectivityMap::checkerboard,
                  py::arg("width"), py::arg("height"), py::arg("low"),
                  py::arg("high"))
      .def_readonly("width", &ReflectivityMap::width)
      .def_readonly("height", &ReflectivityMap::height)
      .def_readonly("values", &ReflectivityMap::values);
  py::class_<ImagingConfig>(m, "ImagingConfig")
      .def(py::init([](int shots, Kind kind, double b, int d, double threshold,
                       std::uint64_t seed) {
             ImagingConfig c;
             c.shots_per_pixel = shots;
             c.kind = kind;
             c.thermal_weight = b;
             c.mode_count = d;
             c.threshold = threshold;
             c.seed = seed;
             c.validate();
             return c;
           }),
           py::arg("shots_per_pixel"), py::arg("kind"), py::arg("thermal_weight"),
           py::arg("mode_count"), py::arg("threshold"), py::arg("seed"))
      .def_readwrite("shots_per_pixel", &ImagingConfig::shots_per_pixel)
      .def_readwrite("threshold", &ImagingConfig::threshold);
  py::class_<ImageResult>(m, "ImageResult")
      .def_readonly("width", &ImageResult::width)
      .def_readonly("height", &ImageResult::height)
      .def_readonly("detected", &ImageResult::detected)
      .def_readonly("yes_fraction", &ImageResult::yes_fraction)
      .def_readonly("pixel_error_rate", &ImageResult::pixel_error_rate)
      .def_readonly("threshold_warnings", &ImageResult::threshold_warnings);
  py::class_<ModeComparison>(m, "ModeComparison")
      .def_readonly("unentangled_error_rate", &ModeComparison::unentangled_error_rate)
      .def_readonly("entangled_error_rate", &ModeComparison::entangled_error_rate)
      .def_readonly("difference", &ModeComparison::difference)
      .def_readonly("sigma_difference", &ModeComparison::sigma_difference)
      .def_readonly("shots_unentangled", &ModeComparison::shots_unentangled)
      .def_readonly("shots_entangled", &ModeComparison::shots_entangled)
      .def_readonly("threshold_unentangled", &ModeComparison::threshold_unentangled)
      .def_readonly("threshold_entangled", &ModeComparison::threshold_entangled);

  m.def("scan_image", &scan_image, py::arg("map"), py::arg("config"),
        py::call_guard<py::gil_scoped_release>());
  m.def("compare_modes", &compare_modes, py::arg("map"), py::arg("thermal_weight"),
        py::arg("mode_count"), py::arg("shots_unentangled"), py::arg("seed"),
        py::call_guard<py::gil_scoped_release>());

  m.attr("__all__") = py::make_tuple(
      "Kind", "Truth", "Decision", "StopRule", "Regime", "ScenarioParams",
      "SignalSpec", "DensityMatrix", "HypothesisPair", "unentangled_pair",
      "entangled_pair", "exact_thermal", "approximation_gap", "ebits",
      "thermal_mode_weight", "trace_distance", "HelstromResult",
      "ChernoffResult", "TrialOutcomeModel", "RegimeLabel", "helstrom",
      "chernoff_overlap", "chernoff_numeric", "chernoff_analytic_unentangled",
      "chernoff_analytic_entangled", "classify_regime", "conditional_probs",
      "classical_chernoff_bernoulli", "trials_needed", "TrialConfig",
      "TrialResult", "CampaignSummary", "run_sprt", "run_first_photon",
      "campaign", "ReflectivityMap", "ImagingConfig", "ImageResult",
      "ModeComparison", "scan_image", "compare_modes", "QillumError");
}
