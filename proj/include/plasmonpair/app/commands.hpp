#pragma once

#include <complex>
#include <exception>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "plasmonpair/app/config.hpp"
#include "plasmonpair/app/scenario.hpp"

namespace plasmonpair::app {

enum class OutputFormat { csv, json, text };

struct LambdaGrid {
  double min = 0.0;
  double max = 0.0;
  std::size_t steps = 1;

  std::vector<double> values() const;
};

enum class Fig1Panel { emitted, excitation };
enum class Fig1AngleMode { resonant, fixed };

struct Fig1Options {
  LambdaGrid grid{0.6e-6, 1.9e-6, 131};
  std::vector<double> prism_indices;  // empty: the config's prism
  Fig1Panel panel = Fig1Panel::emitted;
  Fig1AngleMode angle_mode = Fig1AngleMode::resonant;
};

struct Fig2Options {
  LambdaGrid grid{0.4e-6, 1.9e-6, 151};
  std::string metal = "silver";
  std::string dielectric = "vacuum";
  std::optional<std::complex<double>> metal_eps;  // constant toy metal
};

enum class SweepParameter { thickness, angle, prism_index };

struct SweepOptions {
  SweepParameter parameter = SweepParameter::thickness;
  double from = 20e-9;  // SI: metres, radians or index
  double to = 120e-9;
  std::size_t steps = 101;
};

struct MatchOptions {
  std::optional<double> phi;  // from plane, radians
};

struct GratingOptions {
  int order = 1;
  std::optional<double> phi;
};

struct BellOptions {
  double relative_phase = 0.0;
  std::optional<entangle::ChshAngles> angles;
};

void cmd_fig1(const ScenarioConfig& config, const Fig1Options& options, OutputFormat format, std::ostream& out);
void cmd_fig2(const ScenarioConfig& config, const Fig2Options& options, OutputFormat format, std::ostream& out);
void cmd_evaluate(const ScenarioConfig& config, OutputFormat format, std::ostream& out);
void cmd_sweep(const ScenarioConfig& config, const SweepOptions& options, OutputFormat format, std::ostream& out);
void cmd_match(const ScenarioConfig& config, const MatchOptions& options, OutputFormat format, std::ostream& out);
void cmd_grating(const ScenarioConfig& config, const GratingOptions& options, OutputFormat format, std::ostream& out);
void cmd_bell(const ScenarioConfig& config, const BellOptions& options, OutputFormat format, std::ostream& out);

/// Maps an exception to the documented process exit code:
/// 2 config/parse, 3 physics domain, 4 internal numerical failure.
int exit_code_for(const std::exception& e);

std::string tool_version();

}  // namespace plasmonpair::app
