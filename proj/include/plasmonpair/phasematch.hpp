#pragma once

#include <string_view>

#include "plasmonpair/spp.hpp"

namespace plasmonpair::phasematch {

using spp::Dispersion;

enum class Regime { degenerate, nondegenerate, superluminal_no_spdc };

std::string_view to_string(Regime regime);

/// Raised when a solver is asked for a solution in the wrong regime.
class RegimeError : public PhysicsError {
 public:
  using PhysicsError::PhysicsError;
};

/// Pump incident through the prism at a grazing angle phi (from the
/// interface plane). The in-plane wavenumber is derived, never stored.
struct PumpGeometry {
  double omega0;
  double n0;
  double phi_from_plane;

  double k_par() const;
};

struct PhaseMatchSolution {
  double omega1;
  double omega2;  // omega0 - omega1
  double k1;      // Re k_spp(omega1)
  double k2;      // Re k_spp(omega2)
  double residual;
  Regime regime;
};

struct DegenerateMatch {
  double phi0;
  PhaseMatchSolution solution;
};

/// Degenerate pairs omega1 = omega2 = omega0/2 at phi0 = arccos(n_sp(omega0/2)/n0).
/// Throws PhysicsError when the prism cannot couple to the mode.
DegenerateMatch degenerate_match(double omega0, double n0, const Dispersion& dispersion);

/// Solves Re k(omega1) + Re k(omega0 - omega1) = k0 n0 cos(phi) for the
/// branch omega1 <= omega0/2. phi = phi0 returns the degenerate solution;
/// phi > phi0 throws RegimeError; no root in the admissible bracket throws
/// PhysicsError ("unmatchable geometry").
PhaseMatchSolution nondegenerate_match(double omega0, double n0, double phi_from_plane, const Dispersion& dispersion);

Regime classify_regime(double phi_from_plane, double phi0);

/// Grating that folds the pump's in-plane momentum onto the SPP at omega0:
/// k_a = (Re k_spp(omega0) - k_par_pump) / order.
spp::GratingSpec design_grating_period(double omega0, double k_par_pump, const Dispersion& dispersion, int order);

/// Relative error of recovering k_par_pump by folding Re k_spp(omega0) down
/// by `order` grating momenta.
double grating_round_trip_residual(double omega0, double k_par_pump, const Dispersion& dispersion,
                                   const spp::GratingSpec& grating);

}  // namespace plasmonpair::phasematch
