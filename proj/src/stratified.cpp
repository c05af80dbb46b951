// Transfer-matrix optics of planar stacks, exp(-i omega t) time convention
// with n + ik for absorbing media.
//
// Tangential fields obey [E; H] = M [E; H] across a layer with tilted
// admittances y_s = k_z / k0 and y_p = eps k0 / k_z. With this choice the
// p-polarized amplitude reflection at normal incidence is (n1 - n2)/(n1 + n2),
// the same sign as s polarization.

#include "plasmonpair/stratified.hpp"

#include <cmath>
#include <limits>

#include "plasmonpair/constants.hpp"
#include "plasmonpair/numerics.hpp"

namespace plasmonpair::stratified {

using materials::permittivity;

namespace {

constexpr complex I{0.0, 1.0};

// sin(z)/z, analytic through z = 0.
complex sinc(complex z) {
  if (std::abs(z) < 1e-4) {
    const complex z2 = z * z;
    return 1.0 - z2 / 6.0 + z2 * z2 / 120.0;
  }
  return std::sin(z) / z;
}

double wavenumber(double lambda_vac) { return 2.0 * constants::pi / lambda_vac; }

complex admittance(Polarization pol, complex eps, complex kz, double k0) {
  return pol == Polarization::p ? eps * k0 / kz : kz / k0;
}

void validate_layer(const Layer& layer) {
  if (!std::isfinite(layer.thickness) || layer.thickness < 0.0)
    throw ValidationError("layer thickness must be finite and non-negative");
}

}  // namespace

LayerStack::LayerStack(Material entry, std::vector<Layer> layers, Material exit)
    : entry_(std::move(entry)), layers_(std::move(layers)), exit_(std::move(exit)) {
  if (!entry_.is_lossless()) throw ValidationError("entry medium must be lossless (real refractive index)");
  for (const auto& layer : layers_) validate_layer(layer);
}

LayerStack LayerStack::with_thickness(std::size_t index, double thickness) const {
  if (index >= layers_.size()) throw ValidationError("layer index out of range");
  auto layers = layers_;
  layers[index].thickness = thickness;
  return LayerStack(entry_, std::move(layers), exit_);
}

void PlaneWaveContext::validate() const {
  if (!std::isfinite(lambda_vac) || lambda_vac <= 0.0) throw ValidationError("wavelength must be positive");
  if (!(angle_from_normal >= 0.0) || !(angle_from_normal < constants::pi / 2.0))
    throw RangeError("angle of incidence must lie in [0, pi/2) from the normal");
}

complex normal_wavenumber(complex eps, double k0, double k_par) {
  complex kz = std::sqrt(eps * (k0 * k0) - k_par * k_par);
  if (kz.imag() < 0.0 || (kz.imag() == 0.0 && kz.real() < 0.0)) kz = -kz;
  return kz;
}

double in_plane_wavenumber(const LayerStack& stack, const PlaneWaveContext& context) {
  return wavenumber(context.lambda_vac) * stack.entry().real_index() * std::sin(context.angle_from_normal);
}

CharacteristicMatrix characteristic_matrix(const Layer& layer, const PlaneWaveContext& context, double k_par) {
  validate_layer(layer);
  const double k0 = wavenumber(context.lambda_vac);
  const complex eps = permittivity(layer.material, context.lambda_vac);
  const double d = layer.thickness;
  // Written through kz^2 and sinc so the matrix is branch-independent and
  // stays finite at kz = 0.
  const complex kz2 = eps * (k0 * k0) - k_par * k_par;
  const complex kz = normal_wavenumber(eps, k0, k_par);
  const complex delta = kz * d;
  const complex c = std::cos(delta);
  const complex sd = d * sinc(delta);  // sin(delta) / kz
  if (context.polarization == Polarization::p) {
    return {c, -I * kz2 * sd / (eps * k0), -I * eps * k0 * sd, c};
  }
  return {c, -I * k0 * sd, -I * kz2 * sd / k0, c};
}

StackResponse stack_response(const LayerStack& stack, const PlaneWaveContext& context) {
  context.validate();
  const double k0 = wavenumber(context.lambda_vac);
  const double n0 = stack.entry().real_index();
  const double k_par = k0 * n0 * std::sin(context.angle_from_normal);
  const auto pol = context.polarization;

  CharacteristicMatrix m;
  for (const auto& layer : stack.layers()) m = m * characteristic_matrix(layer, context, k_par);

  const complex eps0{n0 * n0, 0.0};
  const complex kz0 = normal_wavenumber(eps0, k0, k_par);
  const complex y0 = admittance(pol, eps0, kz0, k0);
  const complex eps_s = permittivity(stack.exit(), context.lambda_vac);
  const complex kzs = normal_wavenumber(eps_s, k0, k_par);
  const complex ys = admittance(pol, eps_s, kzs, k0);

  const complex b = m.m11 + m.m12 * ys;
  const complex c = m.m21 + m.m22 * ys;
  const complex denom = y0 * b + c;
  if (std::abs(denom) == 0.0) throw NumericalError("singular stack response");

  StackResponse out{};
  out.r = (y0 * b - c) / denom;
  out.R = std::norm(out.r);
  // Tangential E at the exit side per unit tangential incident E.
  const complex t_tan = 2.0 * y0 / denom;
  out.T = std::max(0.0, ys.real()) * std::norm(t_tan) / y0.real();

  if (pol == Polarization::p) {
    // cos(theta) = kz / (n k0) in each medium; the incident tangential
    // component of a unit p wave is cos(theta_0).
    const complex cos0 = kz0 / (n0 * k0);
    const complex ex = t_tan * cos0;
    const complex ns = std::sqrt(eps_s);
    out.t = ex * ns * k0 / kzs;
    const double ratio = k_par / std::abs(kzs);
    out.eta = std::abs(ex) * std::sqrt(1.0 + ratio * ratio);
  } else {
    out.t = t_tan;
    out.eta = std::abs(t_tan);
  }
  return out;
}

std::vector<SpectrumPoint> enhancement_spectrum(const LayerStack& stack, Polarization polarization,
                                                double angle_from_normal, const std::vector<double>& lambda_grid) {
  std::vector<SpectrumPoint> out;
  out.reserve(lambda_grid.size());
  for (double lambda : lambda_grid) {
    const auto resp = stack_response(stack, {lambda, polarization, angle_from_normal});
    out.push_back({lambda, resp.eta});
  }
  return out;
}

ResonanceAngle resonance_angle(const LayerStack& stack, double lambda_vac, Polarization polarization) {
  constexpr double kScanStep = 0.0025 * constants::pi / 180.0;
  constexpr double kUpper = constants::pi / 2.0 - 1e-9;
  const double n0 = stack.entry().real_index();
  const double n_exit = std::real(stack.exit().refractive_index(lambda_vac));
  const double lower = n_exit < n0 ? std::asin(n_exit / n0) : 0.0;

  auto reflectance = [&](double theta) { return stack_response(stack, {lambda_vac, polarization, theta}).R; };

  const auto steps = static_cast<std::size_t>(std::ceil((kUpper - lower) / kScanStep));
  const double h = (kUpper - lower) / static_cast<double>(steps);
  // At the exit light line itself the exit admittance diverges and R is not
  // finite, so such samples are skipped.
  std::size_t best = 0;
  double best_r = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i <= steps; ++i) {
    const double r = reflectance(lower + h * static_cast<double>(i));
    if (std::isfinite(r) && r < best_r) {
      best_r = r;
      best = i;
    }
  }
  const double a = lower + h * static_cast<double>(best == 0 ? 0 : best - 1);
  const double b = std::min(kUpper, lower + h * static_cast<double>(best + 1));
  if (!std::isfinite(best_r)) throw NumericalError("reflectance is not finite over the angle scan");
  auto finite_reflectance = [&](double theta) {
    const double r = reflectance(theta);
    return std::isfinite(r) ? r : std::numeric_limits<double>::infinity();
  };
  const auto refined = numerics::golden_section_minimize(finite_reflectance, a, b, 1e-13);
  return {refined.x, refined.value};
}

ThicknessOptimum optimize_thickness(const LayerStack& stack_template, std::size_t layer_index,
                                    Polarization polarization, double lambda_vac, const AngleRule& angle_rule,
                                    double thickness_min, double thickness_max, double tolerance) {
  if (!(thickness_min > 0.0) || !std::isfinite(thickness_max))
    throw ValidationError("thickness range bounds must be positive and finite");
  if (thickness_min > thickness_max) throw ValidationError("thickness range is inverted");
  if (!(tolerance > 0.0)) throw ValidationError("thickness tolerance must be positive");
  if (layer_index >= stack_template.layers().size()) throw ValidationError("layer index out of range");

  auto angle_for = [&](const LayerStack& stack) {
    if (angle_rule.fixed_angle_from_normal) return *angle_rule.fixed_angle_from_normal;
    return resonance_angle(stack, lambda_vac, polarization).angle_from_normal;
  };
  auto eta_at = [&](double d) {
    const auto stack = stack_template.with_thickness(layer_index, d);
    return stack_response(stack, {lambda_vac, polarization, angle_for(stack)}).eta;
  };
  const auto best = numerics::golden_section_maximize(eta_at, thickness_min, thickness_max, tolerance);
  const auto stack = stack_template.with_thickness(layer_index, best.x);
  return {best.x, best.value, angle_for(stack)};
}

}  // namespace plasmonpair::stratified
