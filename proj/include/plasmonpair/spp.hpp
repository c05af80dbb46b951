#pragma once

#include <complex>
#include <functional>
#include <limits>
#include <utility>
#include <vector>

#include "plasmonpair/materials.hpp"

namespace plasmonpair::spp {

using complex = std::complex<double>;

inline constexpr double infinity = std::numeric_limits<double>::infinity();

/// Surface plasmon polariton at a single metal/dielectric interface.
struct SppMode {
  double omega;       // rad/s
  double lambda_vac;  // m
  complex k;          // in-plane wavenumber, 1/m
  complex n_sp;       // c0 k / omega
  double L_prop;      // 1 / (2 Im k), infinity for a lossless mode
  bool bound;         // Re eps_m < -Re eps_d
};

/// k = (2 pi / lambda) sqrt(eps_m eps_d / (eps_m + eps_d)), branch with Re k >= 0.
/// A non-bound configuration is reported through SppMode::bound rather than
/// rejected. Throws PhysicsError at the pole eps_m + eps_d = 0.
SppMode spp_mode(complex metal_eps, complex dielectric_eps, double lambda_vac);

/// Damping-limited coherence length 1 / (2 Im k); infinity when Im k = 0.
double coherence_length_damping(const SppMode& mode);

/// Mismatch-limited coherence length 1 / |k0 - conj(k1) - conj(k2)|;
/// infinity for an exact match.
double coherence_length_mismatch(complex k0_eff, complex k1, complex k2);

struct CouplingAngle {
  double phi_from_plane;     // the grazing angle used in the phase-matching formulas
  double theta_from_normal;  // pi/2 - phi
};

/// phi = arccos(n_sp / n0). Throws PhysicsError when n_sp exceeds the prism
/// index (no prism coupling) and ValidationError for non-positive n_sp.
CouplingAngle kretschmann_angle(double n_sp_real, double n0);

/// Surface grating of period a supplying momentum k_a = 2 pi / a.
class GratingSpec {
 public:
  explicit GratingSpec(double period, int order = 1);

  double period() const noexcept { return period_; }
  double k_a() const noexcept { return k_a_; }
  int order() const noexcept { return order_; }

 private:
  double period_;
  double k_a_;
  int order_;
};

struct FoldedWavevector {
  int order;
  double k;
};

/// k_n = k - n k_a for n = -n_max .. n_max, ordered by n.
std::vector<FoldedWavevector> fold_wavevector(double k, const GratingSpec& grating, int n_max);

/// An SPP dispersion relation omega -> SppMode with the frequency window over
/// which it may be evaluated.
struct Dispersion {
  std::function<SppMode(double omega)> mode;
  double omega_min = 0.0;
  double omega_max = infinity;

  SppMode operator()(double omega) const { return mode(omega); }
};

/// Dispersion of the bare interface between `metal` and `dielectric`,
/// restricted to the tabulated range of either material.
Dispersion interface_dispersion(const materials::Material& metal, const materials::Material& dielectric);

}  // namespace plasmonpair::spp
