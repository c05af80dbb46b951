#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "plasmonpair/constants.hpp"
#include "plasmonpair/materials.hpp"

namespace plasmonpair::app {

struct GratingRequest {
  int order = 1;
  std::optional<double> period;  // metres; designed when absent
};

/// End-to-end experiment description. Values are SI internally; the text
/// format uses the units named in each key.
struct ScenarioConfig {
  double prism_index = 1.5;
  std::string film_material = "silver";
  double film_thickness = 60.0 * constants::nanometre;  // same rounding as a parsed "60"
  std::string exit_medium = "vacuum";
  double lambda_pair = 1e-6;
  double chi2 = 1e-12;
  double alpha = 1e-2;
  double loss_factor = 1.0;
  double pump_field = 1e6;  // V/m
  double N2 = 0.0;
  double relative_phase = 0.0;
  std::optional<double> angle_phi;  // from the interface plane, radians
  std::optional<double> l_delta;    // metres; SPP damping length when absent
  std::optional<GratingRequest> grating;
  std::map<std::string, std::string> tables;  // extra material name -> CSV path

  /// Applies one `key = value` setting. Throws ParseError for unknown keys
  /// or unparsable values.
  void set(std::string_view key, std::string_view value);

  /// Stable `key = value` listing of every setting, used for hashing.
  std::string canonical() const;
  /// 64-bit FNV-1a of canonical(), as 16 hex digits.
  std::string hash() const;
};

struct ConfigKey {
  std::string_view key;
  std::string_view help;
};

/// Every key accepted by ScenarioConfig::set except `table.<name>`.
const std::vector<ConfigKey>& config_keys();

/// Reads flat `key = value` text with `#` comments.
ScenarioConfig parse_config(std::istream& in, ScenarioConfig base = {});
ScenarioConfig parse_config(std::string_view text, ScenarioConfig base = {});
ScenarioConfig load_config_file(const std::string& path, ScenarioConfig base = {});

/// Resolves material names: `vacuum`, `air`, `silver` (alias `Ag`),
/// `n:<index>` for a constant index, and any table registered in the config.
class MaterialLibrary {
 public:
  explicit MaterialLibrary(const ScenarioConfig& config);
  materials::Material resolve(const std::string& name) const;

 private:
  std::map<std::string, materials::Material> named_;
};

/// Scientific notation, 9 significant digits, locale independent.
std::string format_number(double value);

double parse_number(std::string_view text);

}  // namespace plasmonpair::app
