#include "plasmonpair/app/config.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "plasmonpair/constants.hpp"

namespace plasmonpair::app {

namespace {

constexpr double kDeg = constants::pi / 180.0;

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

int parse_int(std::string_view text) {
  text = trim(text);
  int v = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc{} || ptr != text.data() + text.size())
    throw ParseError("expected an integer, got '" + std::string(text) + "'");
  return v;
}

}  // namespace

double parse_number(std::string_view text) {
  text = trim(text);
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  double v = 0.0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size() || !std::isfinite(v))
    throw ParseError("expected a number, got '" + std::string(text) + "'");
  return v;
}

std::string format_number(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  if (value == 0.0) value = 0.0;  // no negative zero
  std::array<char, 64> buf{};
  auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value, std::chars_format::scientific, 8);
  if (ec != std::errc{}) throw NumericalError("number formatting failed");
  return std::string(buf.data(), ptr);
}

const std::vector<ConfigKey>& config_keys() {
  static const std::vector<ConfigKey> keys{
      {"prism_index", "refractive index of the coupling prism"},
      {"film_material", "metal film material name"},
      {"film_thickness_nm", "metal film thickness in nm"},
      {"exit_medium", "dielectric behind the film"},
      {"lambda_pair_um", "vacuum wavelength of the generated pair photons in um"},
      {"chi2_pm_per_V", "second-order susceptibility magnitude in pm/V"},
      {"alpha", "dimensionless yield prefactor"},
      {"loss_factor", "setup loss factor in (0, 1]"},
      {"pump_field_V_per_m", "pump field amplitude E0 in V/m"},
      {"N2", "idler input photons per mode"},
      {"relative_phase_rad", "phase of |zy> relative to |yz>"},
      {"angle_phi_deg", "pump angle from the interface plane in degrees (default: resonance)"},
      {"l_delta_mm", "coherence length override in mm (default: SPP damping length)"},
      {"grating_order", "design a coupling grating of this order"},
      {"grating_period_um", "use this grating period instead of designing one"},
  };
  return keys;
}

void ScenarioConfig::set(std::string_view key, std::string_view value) {
  key = trim(key);
  value = trim(value);
  if (key.rfind("table.", 0) == 0) {
    const auto name = key.substr(6);
    if (name.empty() || value.empty()) throw ParseError("table entries need a name and a path");
    tables[std::string(name)] = std::string(value);
    return;
  }
  if (key == "prism_index") {
    prism_index = parse_number(value);
  } else if (key == "film_material") {
    film_material = std::string(value);
  } else if (key == "film_thickness_nm") {
    film_thickness = parse_number(value) * constants::nanometre;
  } else if (key == "exit_medium") {
    exit_medium = std::string(value);
  } else if (key == "lambda_pair_um") {
    lambda_pair = parse_number(value) * constants::micrometre;
  } else if (key == "chi2_pm_per_V") {
    chi2 = parse_number(value) * constants::picometre_per_volt;
  } else if (key == "alpha") {
    alpha = parse_number(value);
  } else if (key == "loss_factor") {
    loss_factor = parse_number(value);
  } else if (key == "pump_field_V_per_m") {
    pump_field = parse_number(value);
  } else if (key == "N2") {
    N2 = parse_number(value);
  } else if (key == "relative_phase_rad") {
    relative_phase = parse_number(value);
  } else if (key == "angle_phi_deg") {
    angle_phi = parse_number(value) * kDeg;
  } else if (key == "l_delta_mm") {
    l_delta = parse_number(value) * 1e-3;
  } else if (key == "grating_order") {
    if (!grating) grating.emplace();
    grating->order = parse_int(value);
  } else if (key == "grating_period_um") {
    if (!grating) grating.emplace();
    grating->period = parse_number(value) * constants::micrometre;
  } else {
    throw ParseError("unknown config key '" + std::string(key) + "'");
  }
}

std::string ScenarioConfig::canonical() const {
  std::ostringstream s;
  s << "prism_index = " << format_number(prism_index) << '\n'
    << "film_material = " << film_material << '\n'
    << "film_thickness_nm = " << format_number(film_thickness / constants::nanometre) << '\n'
    << "exit_medium = " << exit_medium << '\n'
    << "lambda_pair_um = " << format_number(lambda_pair / constants::micrometre) << '\n'
    << "chi2_pm_per_V = " << format_number(chi2 / constants::picometre_per_volt) << '\n'
    << "alpha = " << format_number(alpha) << '\n'
    << "loss_factor = " << format_number(loss_factor) << '\n'
    << "pump_field_V_per_m = " << format_number(pump_field) << '\n'
    << "N2 = " << format_number(N2) << '\n'
    << "relative_phase_rad = " << format_number(relative_phase) << '\n';
  if (angle_phi) s << "angle_phi_deg = " << format_number(*angle_phi / kDeg) << '\n';
  if (l_delta) s << "l_delta_mm = " << format_number(*l_delta * 1e3) << '\n';
  if (grating) {
    s << "grating_order = " << grating->order << '\n';
    if (grating->period) s << "grating_period_um = " << format_number(*grating->period / constants::micrometre) << '\n';
  }
  for (const auto& [name, path] : tables) s << "table." << name << " = " << path << '\n';
  return s.str();
}

std::string ScenarioConfig::hash() const {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : canonical()) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

ScenarioConfig parse_config(std::istream& in, ScenarioConfig base) {
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    auto line = trim(raw);
    if (line.empty() || line.front() == '#') continue;
    // A '#' after whitespace starts a trailing comment.
    for (std::size_t i = 1; i < line.size(); ++i) {
      if (line[i] == '#' && (line[i - 1] == ' ' || line[i - 1] == '\t')) {
        line = trim(line.substr(0, i));
        break;
      }
    }
    const auto eq = line.find('=');
    if (eq == std::string_view::npos)
      throw ParseError("config line " + std::to_string(line_no) + ": expected 'key = value'");
    try {
      base.set(line.substr(0, eq), line.substr(eq + 1));
    } catch (const ParseError& e) {
      throw ParseError("config line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  return base;
}

ScenarioConfig parse_config(std::string_view text, ScenarioConfig base) {
  std::istringstream in{std::string(text)};
  return parse_config(in, std::move(base));
}

ScenarioConfig load_config_file(const std::string& path, ScenarioConfig base) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open config file '" + path + "'");
  return parse_config(in, std::move(base));
}

MaterialLibrary::MaterialLibrary(const ScenarioConfig& config) {
  named_.emplace("vacuum", materials::vacuum());
  named_.emplace("air", materials::Material::constant_index(1.0, "air"));
  named_.emplace("silver", materials::silver());
  named_.emplace("Ag", materials::silver());
  for (const auto& [name, path] : config.tables) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open optical-constant table '" + path + "'");
    auto loaded = materials::load_optical_constants(in, name);
    if (loaded.source().empty()) loaded = materials::OpticalConstantTable(name, loaded.samples(), "file " + path);
    auto table = std::make_shared<const materials::OpticalConstantTable>(std::move(loaded));
    named_.insert_or_assign(name, materials::Material::tabulated(std::move(table)));
  }
}

materials::Material MaterialLibrary::resolve(const std::string& name) const {
  if (auto it = named_.find(name); it != named_.end()) return it->second;
  if (name.rfind("n:", 0) == 0) return materials::Material::constant_index(parse_number(name.substr(2)), name);
  throw ParseError("unknown material '" + name + "'");
}

}  // namespace plasmonpair::app
