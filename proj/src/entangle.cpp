#include "plasmonpair/entangle.hpp"

#include <cmath>

#include "plasmonpair/constants.hpp"
#include "plasmonpair/errors.hpp"

namespace plasmonpair::entangle {

namespace {

double norm_sq(const std::array<complex, 4>& a) {
  double s = 0.0;
  for (const auto& x : a) s += std::norm(x);
  return s;
}

std::size_t channel(char c) {
  switch (c) {
    case 'y':
      return 0;
    case 'z':
      return 1;
  }
  throw ValidationError(std::string("emitted photons must be y- or z-polarized, got '") + c + "'");
}

// Expectation <A (x) B> for A, B in {sigma_z, sigma_x} over the (y, z) basis.
// A linear polarizer at angle t measures cos(2t) sigma_z + sin(2t) sigma_x.
double pauli_expectation(const TwoPhotonState& state, int a, int b) {
  const auto& psi = state.amplitudes();
  auto apply = [](int op, std::size_t i) -> std::pair<std::size_t, double> {
    if (op == 0) return {i, i == 0 ? 1.0 : -1.0};  // sigma_z
    return {1 - i, 1.0};                           // sigma_x
  };
  complex sum{0.0, 0.0};
  for (std::size_t s = 0; s < 2; ++s) {
    for (std::size_t i = 0; i < 2; ++i) {
      const auto [s2, fs] = apply(a, s);
      const auto [i2, fi] = apply(b, i);
      sum += std::conj(psi[2 * s2 + i2]) * fs * fi * psi[2 * s + i];
    }
  }
  return sum.real();
}

}  // namespace

TwoPhotonState::TwoPhotonState(const std::array<complex, 4>& amplitudes) : amplitudes_(amplitudes) {
  const double n = norm_sq(amplitudes_);
  if (!std::isfinite(n) || std::abs(n - 1.0) > kNormTolerance)
    throw ValidationError("two-photon state is not normalized");
}

TwoPhotonState TwoPhotonState::normalized(const std::array<complex, 4>& amplitudes) {
  const double n = norm_sq(amplitudes);
  if (!(n > 0.0) || !std::isfinite(n)) throw ValidationError("degenerate two-photon state: all amplitudes vanish");
  auto out = amplitudes;
  const double scale = 1.0 / std::sqrt(n);
  for (auto& x : out) x *= scale;
  return TwoPhotonState(out);
}

Analyzer::Analyzer(double angle) : angle_(std::fmod(angle, constants::pi)) {
  if (!std::isfinite(angle)) throw ValidationError("analyzer angle must be finite");
  if (angle_ < 0.0) angle_ += constants::pi;
}

TwoPhotonState emitted_state(const std::vector<spdc::TensorComponent>& active_components, double relative_phase) {
  std::array<complex, 4> amps{};
  for (const auto& c : active_components) {
    const std::size_t idx = 2 * channel(c.signal) + channel(c.idler);
    amps[idx] += idx == Basis::zy ? std::polar(1.0, relative_phase) : complex{1.0, 0.0};
  }
  return TwoPhotonState::normalized(amps);
}

double coincidence_probability(const TwoPhotonState& state, const Analyzer& signal, const Analyzer& idler) {
  const auto& psi = state.amplitudes();
  if (std::abs(norm_sq(psi) - 1.0) > TwoPhotonState::kNormTolerance)
    throw ValidationError("two-photon state is not normalized");
  const double cs = std::cos(signal.angle()), ss = std::sin(signal.angle());
  const double ci = std::cos(idler.angle()), si = std::sin(idler.angle());
  const complex amp = cs * ci * psi[yy] + cs * si * psi[yz] + ss * ci * psi[zy] + ss * si * psi[zz];
  return std::norm(amp);
}

bool is_separable(const TwoPhotonState& state, double tolerance) {
  const auto& a = state.amplitudes();
  return std::abs(a[yy] * a[zz] - a[yz] * a[zy]) <= tolerance;
}

double correlation(const TwoPhotonState& state, const Analyzer& a, const Analyzer& b) {
  const auto a_perp = a.orthogonal();
  const auto b_perp = b.orthogonal();
  return coincidence_probability(state, a, b) + coincidence_probability(state, a_perp, b_perp) -
         coincidence_probability(state, a, b_perp) - coincidence_probability(state, a_perp, b);
}

double chsh_value(const TwoPhotonState& state, const ChshAngles& angles) {
  const Analyzer a(angles.a), ap(angles.a_prime), b(angles.b), bp(angles.b_prime);
  return std::abs(correlation(state, a, b) - correlation(state, a, bp) + correlation(state, ap, b) +
                  correlation(state, ap, bp));
}

ChshOptimum chsh_optimum(const TwoPhotonState& state) {
  // E(a, b) = u(a)^T T v(b) with u(t) = (cos 2t, sin 2t).
  const double t11 = pauli_expectation(state, 0, 0), t12 = pauli_expectation(state, 0, 1);
  const double t21 = pauli_expectation(state, 1, 0), t22 = pauli_expectation(state, 1, 1);

  // Right singular vectors of T from the eigenvectors of T^T T.
  const double p = t11 * t11 + t21 * t21;
  const double q = t11 * t12 + t21 * t22;
  const double r = t12 * t12 + t22 * t22;
  const double theta = 0.5 * std::atan2(2.0 * q, p - r);
  const double e1x = std::cos(theta), e1y = std::sin(theta);
  const double e2x = -e1y, e2y = e1x;
  auto apply = [&](double x, double y) { return std::pair{t11 * x + t12 * y, t21 * x + t22 * y}; };
  auto [f1x, f1y] = apply(e1x, e1y);
  auto [f2x, f2y] = apply(e2x, e2y);
  const double s1 = std::hypot(f1x, f1y);
  const double s2 = std::hypot(f2x, f2y);

  // v(b) +- v(b') = 2 cos(g) e1, 2 sin(g) e2 with tan(g) = s2 / s1.
  const double g = std::atan2(s2, s1);
  const double vbx = std::cos(g) * e1x + std::sin(g) * e2x, vby = std::cos(g) * e1y + std::sin(g) * e2y;
  const double vbpx = std::cos(g) * e1x - std::sin(g) * e2x, vbpy = std::cos(g) * e1y - std::sin(g) * e2y;
  // a along T(v(b) - v(b')), a' along T(v(b) + v(b')).
  const auto [ax, ay] = apply(vbx - vbpx, vby - vbpy);
  const auto [apx, apy] = apply(vbx + vbpx, vby + vbpy);

  auto half_angle = [](double x, double y) { return (x == 0.0 && y == 0.0) ? 0.0 : 0.5 * std::atan2(y, x); };
  ChshAngles angles{half_angle(ax, ay), half_angle(apx, apy), half_angle(vbx, vby), half_angle(vbpx, vbpy)};
  return {chsh_value(state, angles), angles};
}

}  // namespace plasmonpair::entangle
