#pragma once

#include <optional>
#include <vector>

#include "plasmonpair/constants.hpp"

namespace plasmonpair::spdc {

/// Cartesian index triple of chi(2): pump polarization, then the two emitted
/// quanta.
struct TensorComponent {
  char pump;
  char signal;
  char idler;

  friend bool operator==(const TensorComponent&, const TensorComponent&) = default;
};

struct NonlinearResponse {
  double chi2_magnitude = 1.0 * constants::picometre_per_volt;  // m/V
  std::vector<TensorComponent> active_components{{'y', 'y', 'z'}, {'y', 'z', 'y'}};

  void validate() const;
};

/// chi2 * eta0 * eta1 * eta2: the interface nonlinearity seen by locally
/// enhanced fields.
double effective_chi2(double chi2, double eta0, double eta1, double eta2);

/// F = 4 pi^2 c0^-2 omega1 omega2 |chi2_eff|^2 |E0|^2 l_delta^2 (dimensionless).
double transformation_coefficient(double omega1, double omega2, double chi2_eff, double E0, double l_delta);

/// N1 = F (N2 + 1); the 1 is the zero-point contribution.
double signal_radiance(double F, double N2);

/// E0 = sqrt(Z0 I0) for pump intensity I0 in W/m^2.
double pump_field_from_intensity(double I0);

/// I0 = N0 hbar omega0^2, the pump power carried by N0 photons per mode.
double pump_power_from_photon_number(double N0, double omega0);

/// Everything the yield estimate needs. Degenerate pairs have eta2 = eta1.
struct SpdcScenario {
  double omega0 = 0.0;  // rad/s
  double eta0 = 1.0;
  double eta1 = 1.0;
  double eta2 = 1.0;
  NonlinearResponse chi2{};
  double l_delta = 1e-3;  // m
  double alpha = 1e-2;
  std::optional<double> pump_field_E0;  // V/m
  std::optional<double> omega1;         // defaults to omega0 / 2
  double N2 = 0.0;
  double loss_factor = 1.0;

  /// Scenario for degenerate pairs at vacuum wavelength lambda_pair.
  static SpdcScenario degenerate(double lambda_pair, double eta0, double eta1);

  /// lambda = 4 pi c0 / omega0, the wavelength of the generated photons.
  double lambda_pair() const;
  double signal_omega() const { return omega1.value_or(0.5 * omega0); }
  double idler_omega() const { return omega0 - signal_omega(); }

  void validate() const;
};

struct YieldReport {
  std::optional<double> F;   // only with a pump field
  std::optional<double> N1;  // F (N2 + 1)
  double kappa;              // loss * alpha (eta0 eta1 eta2)^2 hbar omega0^2 Z0 l^2 / lambda^4 chi2^2
  double kappa_baseline;     // same inputs with every eta = 1
  double enhancement_gain;   // kappa / kappa_baseline = eta0^2 eta1^2 eta2^2
  SpdcScenario inputs;
};

YieldReport yield_kappa(const SpdcScenario& scenario);

}  // namespace plasmonpair::spdc
