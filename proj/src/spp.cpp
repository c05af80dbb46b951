#include "plasmonpair/spp.hpp"

#include <algorithm>
#include <cmath>

#include "plasmonpair/constants.hpp"

namespace plasmonpair::spp {

SppMode spp_mode(complex metal_eps, complex dielectric_eps, double lambda_vac) {
  if (!(lambda_vac > 0.0)) throw ValidationError("wavelength must be positive");
  const complex sum = metal_eps + dielectric_eps;
  if (sum == complex{0.0, 0.0})
    throw PhysicsError("surface-plasmon resonance pole: eps_m + eps_d = 0");
  const double k0 = 2.0 * constants::pi / lambda_vac;
  complex n_sp = std::sqrt(metal_eps * dielectric_eps / sum);
  if (n_sp.real() < 0.0) n_sp = -n_sp;

  SppMode mode{};
  mode.lambda_vac = lambda_vac;
  mode.omega = constants::angular_frequency(lambda_vac);
  mode.n_sp = n_sp;
  mode.k = k0 * n_sp;
  mode.bound = metal_eps.real() < -dielectric_eps.real();
  mode.L_prop = coherence_length_damping(mode);
  return mode;
}

double coherence_length_damping(const SppMode& mode) {
  const double im = mode.k.imag();
  if (im == 0.0) return infinity;
  return 1.0 / (2.0 * im);
}

double coherence_length_mismatch(complex k0_eff, complex k1, complex k2) {
  const double mismatch = std::abs(k0_eff - std::conj(k1) - std::conj(k2));
  if (mismatch == 0.0) return infinity;
  return 1.0 / mismatch;
}

CouplingAngle kretschmann_angle(double n_sp_real, double n0) {
  if (!(n_sp_real > 0.0) || !(n0 > 0.0)) throw ValidationError("mode and prism indices must be positive");
  if (n_sp_real > n0)
    throw PhysicsError("no prism coupling: mode index exceeds prism index");
  const double phi = std::acos(n_sp_real / n0);
  return {phi, constants::pi / 2.0 - phi};
}

GratingSpec::GratingSpec(double period, int order)
    : period_(period), k_a_(2.0 * constants::pi / period), order_(order) {
  if (!std::isfinite(period) || period <= 0.0) throw ValidationError("grating period must be positive and finite");
}

std::vector<FoldedWavevector> fold_wavevector(double k, const GratingSpec& grating, int n_max) {
  if (n_max < 1) throw ValidationError("n_max must be at least 1");
  std::vector<FoldedWavevector> out;
  out.reserve(static_cast<std::size_t>(2 * n_max + 1));
  for (int n = -n_max; n <= n_max; ++n) out.push_back({n, k - n * grating.k_a()});
  return out;
}

Dispersion interface_dispersion(const materials::Material& metal, const materials::Material& dielectric) {
  double lambda_lo = 0.0;
  double lambda_hi = infinity;
  for (const auto* m : {&metal, &dielectric}) {
    if (m->is_tabulated()) {
      lambda_lo = std::max(lambda_lo, m->table().lambda_min());
      lambda_hi = std::min(lambda_hi, m->table().lambda_max());
    }
  }
  Dispersion d;
  // Pulled inward by a few ulps so that omega -> lambda round trips stay in range.
  d.omega_min = std::isinf(lambda_hi) ? 0.0 : constants::angular_frequency(lambda_hi) * (1.0 + 1e-12);
  d.omega_max = lambda_lo == 0.0 ? infinity : constants::angular_frequency(lambda_lo) * (1.0 - 1e-12);
  d.mode = [metal, dielectric](double omega) {
    const double lambda = constants::vacuum_wavelength(omega);
    return spp_mode(materials::permittivity(metal, lambda), materials::permittivity(dielectric, lambda), lambda);
  };
  return d;
}

}  // namespace plasmonpair::spp
