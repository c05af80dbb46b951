#pragma once

#include <array>
#include <complex>
#include <optional>
#include <utility>
#include <vector>

#include "plasmonpair/materials.hpp"

namespace plasmonpair::stratified {

using complex = std::complex<double>;
using materials::Material;

enum class Polarization { s, p };

struct Layer {
  Material material;
  double thickness;  // metres, >= 0
};

/// Semi-infinite entry medium, finite layers, semi-infinite exit medium.
/// The entry medium must be lossless so that the angle of incidence is real.
class LayerStack {
 public:
  LayerStack(Material entry, std::vector<Layer> layers, Material exit);

  const Material& entry() const noexcept { return entry_; }
  const std::vector<Layer>& layers() const noexcept { return layers_; }
  const Material& exit() const noexcept { return exit_; }

  /// Copy with layer `index` set to `thickness`.
  LayerStack with_thickness(std::size_t index, double thickness) const;

 private:
  Material entry_;
  std::vector<Layer> layers_;
  Material exit_;
};

/// Incident plane wave. The angle is measured from the surface normal and
/// must lie in [0, pi/2).
struct PlaneWaveContext {
  double lambda_vac;
  Polarization polarization;
  double angle_from_normal;

  void validate() const;
};

/// Characteristic (Abeles) matrix relating tangential E and H at the top of a
/// layer to those at its bottom.
struct CharacteristicMatrix {
  complex m11{1.0}, m12{0.0}, m21{0.0}, m22{1.0};

  complex determinant() const { return m11 * m22 - m12 * m21; }
  CharacteristicMatrix operator*(const CharacteristicMatrix& o) const {
    return {m11 * o.m11 + m12 * o.m21, m11 * o.m12 + m12 * o.m22, m21 * o.m11 + m22 * o.m21,
            m21 * o.m12 + m22 * o.m22};
  }
};

struct StackResponse {
  complex r;   // amplitude reflection
  complex t;   // amplitude transmission of the full field vector
  double R;    // |r|^2
  double T;    // transmitted power fraction, 0 when the exit wave is evanescent
  double eta;  // |E| at the exit side of the last interface per unit incident |E|
};

/// k_z = sqrt(eps k0^2 - k_par^2) with Im k_z >= 0, ties broken by Re k_z >= 0.
complex normal_wavenumber(complex eps, double k0, double k_par);

/// In-plane wavenumber (2 pi / lambda) n_entry sin(theta).
double in_plane_wavenumber(const LayerStack& stack, const PlaneWaveContext& context);

CharacteristicMatrix characteristic_matrix(const Layer& layer, const PlaneWaveContext& context, double k_par);

StackResponse stack_response(const LayerStack& stack, const PlaneWaveContext& context);

struct SpectrumPoint {
  double lambda_vac;
  double eta;
};

/// eta at a fixed angle over a list of vacuum wavelengths.
std::vector<SpectrumPoint> enhancement_spectrum(const LayerStack& stack, Polarization polarization,
                                                double angle_from_normal, const std::vector<double>& lambda_grid);

struct ResonanceAngle {
  double angle_from_normal;
  double reflectance;
};

/// Angle of minimum reflectance beyond the exit-medium light line (the
/// attenuated-total-reflection dip), located by a fine scan and refined by
/// golden-section search.
ResonanceAngle resonance_angle(const LayerStack& stack, double lambda_vac,
                               Polarization polarization = Polarization::p);

/// Either a fixed angle of incidence or the resonance angle re-solved for
/// every candidate thickness.
struct AngleRule {
  std::optional<double> fixed_angle_from_normal;

  static AngleRule resolve_resonance() { return {}; }
  static AngleRule fixed(double angle_from_normal) { return {angle_from_normal}; }
};

struct ThicknessOptimum {
  double thickness;
  double eta;
  double angle_from_normal;
};

/// Maximizes eta over the thickness of layer `layer_index` in
/// [thickness_min, thickness_max] by golden-section search to `tolerance`.
ThicknessOptimum optimize_thickness(const LayerStack& stack_template, std::size_t layer_index,
                                    Polarization polarization, double lambda_vac, const AngleRule& angle_rule,
                                    double thickness_min, double thickness_max, double tolerance);

}  // namespace plasmonpair::stratified
