#include "plasmonpair/phasematch.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "plasmonpair/constants.hpp"
#include "plasmonpair/numerics.hpp"

namespace plasmonpair::phasematch {

namespace {

// Lower edge of the omega1 bracket as a fraction of omega0.
constexpr double kBracketFloor = 1e-3;
constexpr std::size_t kScanPoints = 65;

double re_k(const Dispersion& dispersion, double omega) { return dispersion(omega).k.real(); }

void require_positive(double v, const char* what) {
  if (!std::isfinite(v) || v <= 0.0) throw ValidationError(std::string(what) + " must be positive and finite");
}

}  // namespace

std::string_view to_string(Regime regime) {
  switch (regime) {
    case Regime::degenerate:
      return "degenerate";
    case Regime::nondegenerate:
      return "nondegenerate";
    case Regime::superluminal_no_spdc:
      return "superluminal-no-SPDC";
  }
  return "unknown";
}

double PumpGeometry::k_par() const { return omega0 / constants::c0 * n0 * std::cos(phi_from_plane); }

DegenerateMatch degenerate_match(double omega0, double n0, const Dispersion& dispersion) {
  require_positive(omega0, "pump frequency");
  require_positive(n0, "prism index");
  const double half = 0.5 * omega0;
  const auto mode = dispersion(half);
  const auto angle = spp::kretschmann_angle(mode.n_sp.real(), n0);
  const double k_par = PumpGeometry{omega0, n0, angle.phi_from_plane}.k_par();
  const double k = mode.k.real();
  PhaseMatchSolution s{half, omega0 - half, k, k, std::abs(k_par - 2.0 * k), Regime::degenerate};
  if (s.residual > 1e-9 * k_par) throw NumericalError("degenerate phase matching residual above tolerance");
  return {angle.phi_from_plane, s};
}

Regime classify_regime(double phi_from_plane, double phi0) {
  if (phi_from_plane > phi0) return Regime::superluminal_no_spdc;
  if (phi_from_plane == phi0) return Regime::degenerate;
  return Regime::nondegenerate;
}

PhaseMatchSolution nondegenerate_match(double omega0, double n0, double phi_from_plane,
                                       const Dispersion& dispersion) {
  const auto degenerate = degenerate_match(omega0, n0, dispersion);
  if (!(phi_from_plane > 0.0)) throw ValidationError("pump angle must be positive");
  switch (classify_regime(phi_from_plane, degenerate.phi0)) {
    case Regime::degenerate:
      return degenerate.solution;
    case Regime::superluminal_no_spdc:
      throw RegimeError("pump angle exceeds the degenerate angle phi0: no SPDC (see classify_regime)");
    case Regime::nondegenerate:
      break;
  }

  const double k_par = PumpGeometry{omega0, n0, phi_from_plane}.k_par();
  auto mismatch = [&](double omega1) { return re_k(dispersion, omega1) + re_k(dispersion, omega0 - omega1) - k_par; };

  const double hi = 0.5 * omega0;
  const double lo = std::max({kBracketFloor * omega0, omega0 - dispersion.omega_max, dispersion.omega_min});
  if (!(lo < hi)) throw PhysicsError("unmatchable geometry: dispersion window excludes non-degenerate pairs");

  std::vector<double> grid(kScanPoints), values(kScanPoints);
  bool monotone = true;
  for (std::size_t i = 0; i < kScanPoints; ++i) {
    grid[i] = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(kScanPoints - 1);
    values[i] = mismatch(grid[i]);
    if (i > 0 && values[i] > values[i - 1]) monotone = false;
  }
  grid.back() = hi;

  double a = lo, b = hi;
  if (!monotone || (values.front() < 0.0) == (values.back() < 0.0)) {
    // Take the sign change closest to omega0/2.
    bool found = false;
    for (std::size_t i = kScanPoints - 1; i > 0; --i) {
      if ((values[i - 1] < 0.0) != (values[i] < 0.0) || values[i] == 0.0) {
        a = grid[i - 1];
        b = grid[i];
        found = true;
        break;
      }
    }
    if (!found) throw PhysicsError("unmatchable geometry: no phase-matched pair in the admissible bracket");
  }
  const double omega1 = numerics::bisect(mismatch, a, b, 1e-12 * omega0);

  PhaseMatchSolution s{};
  s.omega1 = omega1;
  s.omega2 = omega0 - omega1;
  s.k1 = re_k(dispersion, s.omega1);
  s.k2 = re_k(dispersion, s.omega2);
  s.residual = std::abs(k_par - s.k1 - s.k2);
  s.regime = Regime::nondegenerate;
  if (s.residual > 1e-9 * k_par) throw NumericalError("non-degenerate phase matching residual above tolerance");
  return s;
}

spp::GratingSpec design_grating_period(double omega0, double k_par_pump, const Dispersion& dispersion, int order) {
  require_positive(omega0, "pump frequency");
  if (order < 1) throw ValidationError("grating order must be >= 1");
  const double deficit = re_k(dispersion, omega0) - k_par_pump;
  if (!(deficit > 0.0))
    throw PhysicsError("grating unnecessary/invalid: pump in-plane momentum already reaches the SPP at omega0");
  const double k_a = deficit / order;
  return spp::GratingSpec(2.0 * constants::pi / k_a, order);
}

double grating_round_trip_residual(double omega0, double k_par_pump, const Dispersion& dispersion,
                                   const spp::GratingSpec& grating) {
  const auto folded = spp::fold_wavevector(re_k(dispersion, omega0), grating, grating.order());
  const auto& target = folded.back();  // order = +n
  return std::abs(target.k - k_par_pump) / std::abs(k_par_pump);
}

}  // namespace plasmonpair::phasematch
