#pragma once

#include <array>
#include <complex>
#include <optional>
#include <vector>

#include "plasmonpair/spdc.hpp"

namespace plasmonpair::entangle {

using complex = std::complex<double>;

/// Basis index order for two-photon polarization amplitudes. The first
/// letter is the signal channel, the second the idler channel.
enum Basis : std::size_t { yy = 0, yz = 1, zy = 2, zz = 3 };

/// Normalized pure polarization state of a photon pair over (yy, yz, zy, zz).
class TwoPhotonState {
 public:
  static constexpr double kNormTolerance = 1e-12;

  /// Throws ValidationError unless sum |a|^2 = 1 within kNormTolerance.
  explicit TwoPhotonState(const std::array<complex, 4>& amplitudes);

  /// Rescales to unit norm. Throws ValidationError for the zero vector.
  static TwoPhotonState normalized(const std::array<complex, 4>& amplitudes);

  const std::array<complex, 4>& amplitudes() const noexcept { return amplitudes_; }
  complex operator[](Basis b) const noexcept { return amplitudes_[b]; }

 private:
  std::array<complex, 4> amplitudes_;
};

/// Linear polarizer in the y-z plane; angle from y, reduced mod pi.
class Analyzer {
 public:
  explicit Analyzer(double angle);
  double angle() const noexcept { return angle_; }
  Analyzer orthogonal() const { return Analyzer(angle_ + 1.5707963267948966); }

 private:
  double angle_;
};

/// State emitted through the given chi(2) components. Each component
/// (pump, signal, idler) contributes amplitude 1 to |signal idler>, with an
/// optional extra phase on the |zy> term. The default {(y,yz),(y,zy)} yields
/// (|yz> + |zy>)/sqrt(2). Throws ValidationError if no amplitude survives.
TwoPhotonState emitted_state(const std::vector<spdc::TensorComponent>& active_components = {{'y', 'y', 'z'},
                                                                                           {'y', 'z', 'y'}},
                             double relative_phase = 0.0);

/// Probability that the signal passes `signal` and the idler passes `idler`.
double coincidence_probability(const TwoPhotonState& state, const Analyzer& signal, const Analyzer& idler);

/// True iff |det| of the 2x2 amplitude matrix is at most `tolerance`.
bool is_separable(const TwoPhotonState& state, double tolerance = 1e-12);

/// +-1 polarization correlation E(a, b) from the four pass/block outcomes.
double correlation(const TwoPhotonState& state, const Analyzer& a, const Analyzer& b);

struct ChshAngles {
  double a, a_prime, b, b_prime;
};

/// S = |E(a,b) - E(a,b') + E(a',b) + E(a',b')|.
double chsh_value(const TwoPhotonState& state, const ChshAngles& angles);

struct ChshOptimum {
  double S;
  ChshAngles angles;
};

/// Largest S reachable with linear polarizers, from the singular values of
/// the in-plane correlation matrix, together with a set of angles attaining it.
ChshOptimum chsh_optimum(const TwoPhotonState& state);

}  // namespace plasmonpair::entangle
