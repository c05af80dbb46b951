#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "plasmonpair/app/commands.hpp"
#include "plasmonpair/app/scenario.hpp"
#include "plasmonpair/constants.hpp"

namespace py = pybind11;
namespace pp = plasmonpair;

namespace {

// Prism (constant index) / metal film / exit medium, the Kretschmann geometry.
pp::stratified::LayerStack kretschmann_stack(double prism_index, double thickness, const std::string& film,
                                             const std::string& exit) {
  pp::app::ScenarioConfig cfg;
  cfg.film_material = film;
  cfg.exit_medium = exit;
  cfg.film_thickness = thickness;
  return pp::app::build_stack(cfg, pp::app::MaterialLibrary(cfg), prism_index);
}

pp::spp::Dispersion dispersion_for(const std::string& metal, const std::string& dielectric) {
  pp::app::ScenarioConfig cfg;
  const pp::app::MaterialLibrary lib(cfg);
  return pp::spp::interface_dispersion(lib.resolve(metal), lib.resolve(dielectric));
}

py::dict report_to_dict(const pp::app::ScenarioReport& r) {
  py::dict d;
  d["re_nsp"] = r.mode.n_sp.real();
  d["im_nsp"] = r.mode.n_sp.imag();
  d["phi0"] = r.kretschmann.phi_from_plane;
  d["theta0"] = r.kretschmann.theta_from_normal;
  d["resonance_theta"] = r.resonance.angle_from_normal;
  d["resonance_reflectance"] = r.resonance.reflectance;
  d["phi"] = r.phi;
  d["theta"] = r.theta;
  d["regime"] = std::string(pp::phasematch::to_string(r.regime));
  d["eta0"] = r.eta0;
  d["eta1"] = r.eta1;
  d["eta2"] = r.eta2;
  d["l_delta"] = r.l_delta;
  if (r.yield) {
    d["kappa"] = r.yield->kappa;
    d["kappa_baseline"] = r.yield->kappa_baseline;
    d["enhancement_gain"] = r.yield->enhancement_gain;
    if (r.yield->F) d["F"] = *r.yield->F;
  } else {
    d["kappa"] = py::none();
  }
  if (r.grating) {
    d["grating_period"] = r.grating->period;
    d["grating_round_trip_residual"] = r.grating->round_trip_residual;
  }
  d["chsh_optimum"] = r.chsh.S;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "C++ core of plasmonpair";
  m.attr("__version__") = pp::app::tool_version();

  py::register_exception<pp::ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<pp::ValidationError>(m, "ValidationError", PyExc_ValueError);
  py::register_exception<pp::RangeError>(m, "RangeError", PyExc_ValueError);
  py::register_exception<pp::PhysicsError>(m, "PhysicsError", PyExc_RuntimeError);
  py::register_exception<pp::NumericalError>(m, "NumericalError", PyExc_ArithmeticError);

  py::enum_<pp::stratified::Polarization>(m, "Polarization")
      .value("s", pp::stratified::Polarization::s)
      .value("p", pp::stratified::Polarization::p);
  py::enum_<pp::phasematch::Regime>(m, "Regime")
      .value("degenerate", pp::phasematch::Regime::degenerate)
      .value("nondegenerate", pp::phasematch::Regime::nondegenerate)
      .value("superluminal_no_spdc", pp::phasematch::Regime::superluminal_no_spdc);

  m.def("silver_permittivity", [](double lambda) { return pp::materials::permittivity(pp::materials::silver(), lambda); },
        py::arg("lambda_vac"));

  py::class_<pp::stratified::LayerStack>(m, "LayerStack");
  m.def("kretschmann_stack", &kretschmann_stack, py::arg("prism_index") = 1.5, py::arg("thickness") = 60e-9,
        py::arg("film") = "silver", py::arg("exit") = "vacuum");

  py::class_<pp::stratified::StackResponse>(m, "StackResponse")
      .def_readonly("r", &pp::stratified::StackResponse::r)
      .def_readonly("t", &pp::stratified::StackResponse::t)
      .def_readonly("R", &pp::stratified::StackResponse::R)
      .def_readonly("T", &pp::stratified::StackResponse::T)
      .def_readonly("eta", &pp::stratified::StackResponse::eta);

  m.def(
      "stack_response",
      [](const pp::stratified::LayerStack& s, double lambda, pp::stratified::Polarization pol, double theta) {
        return pp::stratified::stack_response(s, {lambda, pol, theta});
      },
      py::arg("stack"), py::arg("lambda_vac"), py::arg("polarization"), py::arg("angle_from_normal"));
  m.def(
      "enhancement_spectrum",
      [](const pp::stratified::LayerStack& s, pp::stratified::Polarization pol, double theta,
         const std::vector<double>& grid) {
        std::vector<std::pair<double, double>> out;
        for (const auto& p : pp::stratified::enhancement_spectrum(s, pol, theta, grid)) out.emplace_back(p.lambda_vac, p.eta);
        return out;
      },
      py::arg("stack"), py::arg("polarization"), py::arg("angle_from_normal"), py::arg("lambda_grid"));
  m.def(
      "resonance_angle",
      [](const pp::stratified::LayerStack& s, double lambda) {
        const auto r = pp::stratified::resonance_angle(s, lambda);
        return py::make_tuple(r.angle_from_normal, r.reflectance);
      },
      py::arg("stack"), py::arg("lambda_vac"));
  m.def(
      "optimize_thickness",
      [](const pp::stratified::LayerStack& s, double lambda, double lo, double hi, double tol) {
        const auto r = pp::stratified::optimize_thickness(s, 0, pp::stratified::Polarization::p, lambda,
                                                          pp::stratified::AngleRule::resolve_resonance(), lo, hi, tol);
        return py::make_tuple(r.thickness, r.eta, r.angle_from_normal);
      },
      py::arg("stack"), py::arg("lambda_vac"), py::arg("thickness_min"), py::arg("thickness_max"),
      py::arg("tolerance") = 1e-11);

  py::class_<pp::spp::SppMode>(m, "SppMode")
      .def_readonly("omega", &pp::spp::SppMode::omega)
      .def_readonly("lambda_vac", &pp::spp::SppMode::lambda_vac)
      .def_readonly("k", &pp::spp::SppMode::k)
      .def_readonly("n_sp", &pp::spp::SppMode::n_sp)
      .def_readonly("L_prop", &pp::spp::SppMode::L_prop)
      .def_readonly("bound", &pp::spp::SppMode::bound);
  m.def("spp_mode", &pp::spp::spp_mode, py::arg("metal_eps"), py::arg("dielectric_eps"), py::arg("lambda_vac"));
  m.def("coherence_length_damping", &pp::spp::coherence_length_damping, py::arg("mode"));
  m.def("coherence_length_mismatch", &pp::spp::coherence_length_mismatch, py::arg("k0_eff"), py::arg("k1"),
        py::arg("k2"));
  m.def(
      "kretschmann_angle",
      [](double n_sp, double n0) {
        const auto a = pp::spp::kretschmann_angle(n_sp, n0);
        return py::make_tuple(a.phi_from_plane, a.theta_from_normal);
      },
      py::arg("n_sp_real"), py::arg("n0"));
  m.def(
      "fold_wavevector",
      [](double k, double period, int n_max) {
        std::vector<std::pair<int, double>> out;
        for (const auto& f : pp::spp::fold_wavevector(k, pp::spp::GratingSpec(period), n_max)) out.emplace_back(f.order, f.k);
        return out;
      },
      py::arg("k"), py::arg("period"), py::arg("n_max"));

  auto solution_dict = [](const pp::phasematch::PhaseMatchSolution& s) {
    py::dict d;
    d["omega1"] = s.omega1;
    d["omega2"] = s.omega2;
    d["k1"] = s.k1;
    d["k2"] = s.k2;
    d["residual"] = s.residual;
    d["regime"] = s.regime;
    return d;
  };
  m.def(
      "degenerate_match",
      [solution_dict](double omega0, double n0, const std::string& metal, const std::string& dielectric) {
        const auto r = pp::phasematch::degenerate_match(omega0, n0, dispersion_for(metal, dielectric));
        return py::make_tuple(r.phi0, solution_dict(r.solution));
      },
      py::arg("omega0"), py::arg("n0"), py::arg("metal") = "silver", py::arg("dielectric") = "vacuum");
  m.def(
      "nondegenerate_match",
      [solution_dict](double omega0, double n0, double phi, const std::string& metal, const std::string& dielectric) {
        return solution_dict(pp::phasematch::nondegenerate_match(omega0, n0, phi, dispersion_for(metal, dielectric)));
      },
      py::arg("omega0"), py::arg("n0"), py::arg("phi"), py::arg("metal") = "silver",
      py::arg("dielectric") = "vacuum");
  m.def("classify_regime", &pp::phasematch::classify_regime, py::arg("phi"), py::arg("phi0"));
  m.def(
      "design_grating_period",
      [](double omega0, double k_par, int order, const std::string& metal, const std::string& dielectric) {
        const auto disp = dispersion_for(metal, dielectric);
        const auto g = pp::phasematch::design_grating_period(omega0, k_par, disp, order);
        return py::make_tuple(g.period(), pp::phasematch::grating_round_trip_residual(omega0, k_par, disp, g));
      },
      py::arg("omega0"), py::arg("k_par_pump"), py::arg("order") = 1, py::arg("metal") = "silver",
      py::arg("dielectric") = "vacuum");

  m.def("effective_chi2", &pp::spdc::effective_chi2, py::arg("chi2"), py::arg("eta0"), py::arg("eta1"),
        py::arg("eta2"));
  m.def("transformation_coefficient", &pp::spdc::transformation_coefficient, py::arg("omega1"), py::arg("omega2"),
        py::arg("chi2_eff"), py::arg("E0"), py::arg("l_delta"));
  m.def("signal_radiance", &pp::spdc::signal_radiance, py::arg("F"), py::arg("N2") = 0.0);
  m.def(
      "yield_kappa",
      [](double lambda_pair, double eta0, double eta1, double chi2, double l_delta, double alpha, double loss) {
        auto s = pp::spdc::SpdcScenario::degenerate(lambda_pair, eta0, eta1);
        s.chi2.chi2_magnitude = chi2;
        s.l_delta = l_delta;
        s.alpha = alpha;
        s.loss_factor = loss;
        const auto r = pp::spdc::yield_kappa(s);
        py::dict d;
        d["kappa"] = r.kappa;
        d["kappa_baseline"] = r.kappa_baseline;
        d["enhancement_gain"] = r.enhancement_gain;
        return d;
      },
      py::arg("lambda_pair"), py::arg("eta0") = 1.0, py::arg("eta1") = 1.0, py::arg("chi2") = 1e-12,
      py::arg("l_delta") = 1e-3, py::arg("alpha") = 1e-2, py::arg("loss_factor") = 1.0);

  m.def(
      "emitted_state",
      [](double phase) {
        const auto s = pp::entangle::emitted_state({{'y', 'y', 'z'}, {'y', 'z', 'y'}}, phase);
        return std::vector<std::complex<double>>(s.amplitudes().begin(), s.amplitudes().end());
      },
      py::arg("relative_phase") = 0.0);
  auto to_state = [](const std::vector<std::complex<double>>& a) {
    if (a.size() != 4) throw pp::ValidationError("a two-photon state has four amplitudes");
    return pp::entangle::TwoPhotonState({a[0], a[1], a[2], a[3]});
  };
  m.def(
      "coincidence_probability",
      [to_state](const std::vector<std::complex<double>>& a, double ts, double ti) {
        return pp::entangle::coincidence_probability(to_state(a), pp::entangle::Analyzer(ts),
                                                     pp::entangle::Analyzer(ti));
      },
      py::arg("amplitudes"), py::arg("signal_angle"), py::arg("idler_angle"));
  m.def(
      "is_separable", [to_state](const std::vector<std::complex<double>>& a, double tol) { return pp::entangle::is_separable(to_state(a), tol); },
      py::arg("amplitudes"), py::arg("tolerance") = 1e-12);
  m.def(
      "chsh_value",
      [to_state](const std::vector<std::complex<double>>& a, double a1, double a2, double b1, double b2) {
        return pp::entangle::chsh_value(to_state(a), {a1, a2, b1, b2});
      },
      py::arg("amplitudes"), py::arg("a"), py::arg("a_prime"), py::arg("b"), py::arg("b_prime"));
  m.def(
      "chsh_optimum",
      [to_state](const std::vector<std::complex<double>>& a) {
        const auto o = pp::entangle::chsh_optimum(to_state(a));
        return py::make_tuple(o.S, py::make_tuple(o.angles.a, o.angles.a_prime, o.angles.b, o.angles.b_prime));
      },
      py::arg("amplitudes"));

  m.def(
      "evaluate",
      [](const std::string& config_text) { return report_to_dict(pp::app::evaluate(pp::app::parse_config(config_text))); },
      py::arg("config_text") = "", "Evaluate a scenario given flat `key = value` config text.");
}
