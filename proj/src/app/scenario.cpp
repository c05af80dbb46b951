#include "plasmonpair/app/scenario.hpp"

#include <cmath>

#include "plasmonpair/constants.hpp"

namespace plasmonpair::app {

namespace {

// Re-throws with the stage name prepended, keeping the error category.
template <class Fn>
auto stage(const char* name, Fn&& fn) -> decltype(fn()) {
  auto prefix = [name](const std::exception& e) { return std::string("[") + name + "] " + e.what(); };
  try {
    return fn();
  } catch (const ParseError& e) {
    throw ParseError(prefix(e));
  } catch (const ValidationError& e) {
    throw ValidationError(prefix(e));
  } catch (const RangeError& e) {
    throw RangeError(prefix(e));
  } catch (const PhysicsError& e) {
    throw PhysicsError(prefix(e));
  } catch (const NumericalError& e) {
    throw NumericalError(prefix(e));
  }
}

}  // namespace

stratified::LayerStack build_stack(const ScenarioConfig& config, const MaterialLibrary& library, double prism_index) {
  return stratified::LayerStack(materials::Material::constant_index(prism_index, "prism"),
                                {{library.resolve(config.film_material), config.film_thickness}},
                                library.resolve(config.exit_medium));
}

ScenarioReport evaluate(const ScenarioConfig& config) {
  using stratified::Polarization;
  ScenarioReport rep{};
  rep.config = config;

  const auto library = stage("materials", [&] { return MaterialLibrary(config); });
  const auto metal = stage("materials", [&] { return library.resolve(config.film_material); });
  const auto exit = stage("materials", [&] { return library.resolve(config.exit_medium); });
  rep.data_source = metal.is_tabulated() ? metal.table().source() : std::string("constant index");
  const auto stack = stage("stratified", [&] { return build_stack(config, library, config.prism_index); });

  const double lambda1 = config.lambda_pair;
  const double omega0 = 4.0 * constants::pi * constants::c0 / lambda1;
  const auto dispersion = spp::interface_dispersion(metal, exit);

  rep.mode = stage("spp", [&] {
    return spp::spp_mode(materials::permittivity(metal, lambda1), materials::permittivity(exit, lambda1), lambda1);
  });
  const auto degenerate = stage("phasematch", [&] { return phasematch::degenerate_match(omega0, config.prism_index, dispersion); });
  rep.kretschmann = {degenerate.phi0, constants::pi / 2.0 - degenerate.phi0};
  rep.resonance = stage("stratified", [&] { return stratified::resonance_angle(stack, lambda1, Polarization::p); });

  rep.angle_overridden = config.angle_phi.has_value();
  if (rep.angle_overridden) {
    rep.phi = *config.angle_phi;
    rep.theta = constants::pi / 2.0 - rep.phi;
    rep.regime = phasematch::classify_regime(rep.phi, degenerate.phi0);
  } else {
    rep.theta = rep.resonance.angle_from_normal;
    rep.phi = constants::pi / 2.0 - rep.theta;
    rep.regime = phasematch::Regime::degenerate;
  }

  auto eta_at = [&](double lambda) {
    return stage("stratified", [&] { return stratified::stack_response(stack, {lambda, Polarization::p, rep.theta}).eta; });
  };
  rep.eta0 = eta_at(0.5 * lambda1);

  double omega1 = 0.5 * omega0;
  rep.l_delta_overridden = config.l_delta.has_value();
  switch (rep.regime) {
    case phasematch::Regime::degenerate:
      rep.match = degenerate.solution;
      rep.eta1 = eta_at(lambda1);
      rep.eta2 = rep.eta1;
      rep.l_delta = spp::coherence_length_damping(rep.mode);
      break;
    case phasematch::Regime::nondegenerate: {
      rep.match = stage("phasematch", [&] {
        return phasematch::nondegenerate_match(omega0, config.prism_index, rep.phi, dispersion);
      });
      omega1 = rep.match->omega1;
      rep.eta1 = eta_at(constants::vacuum_wavelength(rep.match->omega1));
      rep.eta2 = eta_at(constants::vacuum_wavelength(rep.match->omega2));
      const auto m1 = dispersion(rep.match->omega1);
      const auto m2 = dispersion(rep.match->omega2);
      const double k_par = phasematch::PumpGeometry{omega0, config.prism_index, rep.phi}.k_par();
      rep.l_delta = spp::coherence_length_mismatch(k_par, m1.k, m2.k);
      break;
    }
    case phasematch::Regime::superluminal_no_spdc:
      rep.eta1 = eta_at(lambda1);
      rep.eta2 = rep.eta1;
      rep.l_delta = spp::coherence_length_damping(rep.mode);
      break;
  }
  if (config.l_delta) rep.l_delta = *config.l_delta;

  if (rep.regime != phasematch::Regime::superluminal_no_spdc) {
    rep.yield = stage("spdc", [&] {
      spdc::SpdcScenario s;
      s.omega0 = omega0;
      s.eta0 = rep.eta0;
      s.eta1 = rep.eta1;
      s.eta2 = rep.eta2;
      s.chi2.chi2_magnitude = config.chi2;
      s.l_delta = rep.l_delta;
      s.alpha = config.alpha;
      s.pump_field_E0 = config.pump_field;
      if (rep.regime == phasematch::Regime::nondegenerate) s.omega1 = omega1;
      s.N2 = config.N2;
      s.loss_factor = config.loss_factor;
      return spdc::yield_kappa(s);
    });
  }

  if (config.grating) {
    rep.grating = stage("grating", [&] {
      const double k_par = phasematch::PumpGeometry{omega0, config.prism_index, rep.phi}.k_par();
      const int order = config.grating->order;
      const auto spec = config.grating->period ? spp::GratingSpec(*config.grating->period, order)
                                               : phasematch::design_grating_period(omega0, k_par, dispersion, order);
      return GratingReport{order, spec.period(), spec.k_a(),
                           phasematch::grating_round_trip_residual(omega0, k_par, dispersion, spec),
                           !config.grating->period.has_value()};
    });
  }

  rep.chsh = stage("entangle", [&] {
    return entangle::chsh_optimum(entangle::emitted_state({{'y', 'y', 'z'}, {'y', 'z', 'y'}}, config.relative_phase));
  });
  return rep;
}

}  // namespace plasmonpair::app
