#include "plasmonpair/spdc.hpp"

#include <cmath>

#include "plasmonpair/errors.hpp"
#include "plasmonpair/units.hpp"

namespace plasmonpair::spdc {

namespace u = units;

namespace {

void require_non_negative(double v, const char* what) {
  if (!std::isfinite(v) || v < 0.0) throw ValidationError(std::string(what) + " must be finite and non-negative");
}

// F with dimensions carried through the arithmetic.
u::Dimensionless transformation_coefficient_q(u::PerSecond omega1, u::PerSecond omega2, u::MetrePerVolt chi2,
                                              u::VoltPerMetre E0, u::Metre l_delta) {
  const u::MetrePerSecond c0{constants::c0};
  const auto F = 4.0 * constants::pi * constants::pi * (omega1 * omega2) / u::square(c0) * u::square(chi2 * E0) *
                 u::square(l_delta);
  static_assert(u::is_dimensionless_v<decltype(F)>);
  return F;
}

u::Dimensionless kappa_q(double alpha, double enhancement, u::PerSecond omega0, u::Metre lambda, u::Metre l_delta,
                         u::MetrePerVolt chi2) {
  const u::JouleSecond hbar{constants::hbar};
  const u::Ohm Z0{constants::Z0};
  const auto power = hbar * u::square(omega0);
  static_assert(u::same_dimension_v<decltype(power), u::Watt>);
  const auto field_sq = power * Z0 / u::square(lambda);
  static_assert(u::same_dimension_v<decltype(field_sq), decltype(u::square(u::VoltPerMetre{}))>);
  const auto kappa = (alpha * enhancement) * field_sq * u::square(l_delta) / u::square(lambda) * u::square(chi2);
  static_assert(u::is_dimensionless_v<decltype(kappa)>);
  return kappa;
}

}  // namespace

void NonlinearResponse::validate() const { require_non_negative(chi2_magnitude, "chi2 magnitude"); }

double effective_chi2(double chi2, double eta0, double eta1, double eta2) {
  require_non_negative(chi2, "chi2");
  require_non_negative(eta0, "eta0");
  require_non_negative(eta1, "eta1");
  require_non_negative(eta2, "eta2");
  return chi2 * eta0 * eta1 * eta2;
}

double transformation_coefficient(double omega1, double omega2, double chi2_eff, double E0, double l_delta) {
  require_non_negative(omega1, "omega1");
  require_non_negative(omega2, "omega2");
  require_non_negative(chi2_eff, "chi2_eff");
  require_non_negative(E0, "E0");
  require_non_negative(l_delta, "l_delta");
  return transformation_coefficient_q({omega1}, {omega2}, {chi2_eff}, {E0}, {l_delta}).value;
}

double signal_radiance(double F, double N2) {
  require_non_negative(F, "F");
  require_non_negative(N2, "N2");
  return F * (N2 + 1.0);
}

double pump_field_from_intensity(double I0) {
  require_non_negative(I0, "pump intensity");
  return std::sqrt(constants::Z0 * I0);
}

double pump_power_from_photon_number(double N0, double omega0) {
  require_non_negative(N0, "N0");
  require_non_negative(omega0, "omega0");
  return N0 * constants::hbar * omega0 * omega0;
}

SpdcScenario SpdcScenario::degenerate(double lambda_pair, double eta0, double eta1) {
  if (!(lambda_pair > 0.0)) throw ValidationError("pair wavelength must be positive");
  SpdcScenario s;
  s.omega0 = 4.0 * constants::pi * constants::c0 / lambda_pair;
  s.eta0 = eta0;
  s.eta1 = eta1;
  s.eta2 = eta1;
  return s;
}

double SpdcScenario::lambda_pair() const { return 4.0 * constants::pi * constants::c0 / omega0; }

void SpdcScenario::validate() const {
  if (!std::isfinite(omega0) || omega0 <= 0.0) throw ValidationError("pump frequency must be positive");
  require_non_negative(eta0, "eta0");
  require_non_negative(eta1, "eta1");
  require_non_negative(eta2, "eta2");
  chi2.validate();
  require_non_negative(l_delta, "l_delta");
  require_non_negative(alpha, "alpha");
  require_non_negative(N2, "N2");
  if (pump_field_E0) require_non_negative(*pump_field_E0, "pump field");
  if (omega1 && !(*omega1 > 0.0 && *omega1 < omega0)) throw ValidationError("omega1 must lie in (0, omega0)");
  if (!(loss_factor > 0.0 && loss_factor <= 1.0)) throw ValidationError("loss factor must lie in (0, 1]");
}

YieldReport yield_kappa(const SpdcScenario& scenario) {
  scenario.validate();
  const double gain = std::pow(scenario.eta0 * scenario.eta1 * scenario.eta2, 2);
  const u::PerSecond omega0{scenario.omega0};
  const u::Metre lambda{scenario.lambda_pair()};
  const u::Metre l{scenario.l_delta};
  const u::MetrePerVolt chi2{scenario.chi2.chi2_magnitude};

  YieldReport r{};
  r.inputs = scenario;
  r.enhancement_gain = gain;
  r.kappa_baseline = scenario.loss_factor * kappa_q(scenario.alpha, 1.0, omega0, lambda, l, chi2).value;
  r.kappa = scenario.loss_factor * kappa_q(scenario.alpha, gain, omega0, lambda, l, chi2).value;
  if (scenario.pump_field_E0) {
    const double chi_eff = effective_chi2(scenario.chi2.chi2_magnitude, scenario.eta0, scenario.eta1, scenario.eta2);
    r.F = transformation_coefficient(scenario.signal_omega(), scenario.idler_omega(), chi_eff, *scenario.pump_field_E0,
                                     scenario.l_delta);
    r.N1 = signal_radiance(*r.F, scenario.N2);
  }
  return r;
}

}  // namespace plasmonpair::spdc
