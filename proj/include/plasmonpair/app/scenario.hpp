#pragma once

#include <optional>
#include <string>

#include "plasmonpair/app/config.hpp"
#include "plasmonpair/entangle.hpp"
#include "plasmonpair/phasematch.hpp"
#include "plasmonpair/spdc.hpp"
#include "plasmonpair/stratified.hpp"

namespace plasmonpair::app {

struct GratingReport {
  int order;
  double period;
  double k_a;
  double round_trip_residual;
  bool designed;  // false when the period came from the config
};

struct ScenarioReport {
  ScenarioConfig config;

  spp::SppMode mode;             // exit-side SPP at the pair wavelength
  spp::CouplingAngle kretschmann;  // from Re n_sp
  stratified::ResonanceAngle resonance;  // reflectance dip of the full stack

  double phi;    // operating angle from the plane
  double theta;  // operating angle from the normal
  bool angle_overridden;

  phasematch::Regime regime;
  std::optional<phasematch::PhaseMatchSolution> match;

  double eta0;
  double eta1;
  double eta2;
  double l_delta;
  bool l_delta_overridden;

  std::optional<spdc::YieldReport> yield;  // empty when no SPDC takes place
  std::optional<GratingReport> grating;
  entangle::ChshOptimum chsh;

  std::string data_source;
};

/// Reference order-of-magnitude yields for ordinary crystals and for the
/// plasmonic interface, kept for comparison in reports.
inline constexpr double kReferenceKappaOrdinary = 1e-12;
inline constexpr double kReferenceKappaPlasmonic = 1e-4;

stratified::LayerStack build_stack(const ScenarioConfig& config, const MaterialLibrary& library, double prism_index);

/// Runs every stage. Errors are rethrown with the failing stage prepended.
ScenarioReport evaluate(const ScenarioConfig& config);

}  // namespace plasmonpair::app
