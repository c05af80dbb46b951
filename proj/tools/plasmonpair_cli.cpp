#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "plasmonpair/app/commands.hpp"
#include "plasmonpair/constants.hpp"

namespace pa = plasmonpair::app;

namespace {

constexpr double kDeg = plasmonpair::constants::pi / 180.0;

std::string dashed(std::string_view key) {
  std::string s(key);
  for (auto& c : s)
    if (c == '_') c = '-';
  return "--" + s;
}

std::vector<double> parse_list(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(pa::parse_number(item));
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Plasmon-supported parametric down-conversion at a prism/metal/dielectric interface"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_version_flag("--version", pa::tool_version());

  std::string config_path, out_path, format_name;
  std::vector<std::string> settings;
  app.add_option("--config", config_path, "flat key = value config file");
  app.add_option("--out", out_path, "output file (default stdout)");
  app.add_option("--format", format_name, "csv | json | text")->check(CLI::IsMember({"csv", "json", "text"}));
  app.add_option("--set", settings, "KEY=VALUE config override (repeatable), e.g. table.gold=au.csv");

  std::map<std::string, std::string> flag_values;
  for (const auto& k : pa::config_keys()) {
    app.add_option_function<std::string>(
        dashed(k.key), [&flag_values, key = std::string(k.key)](const std::string& v) { flag_values[key] = v; },
        std::string(k.help));
  }

  double lambda_min = 0, lambda_max = 0;
  std::size_t steps = 0;

  auto* fig1 = app.add_subcommand("fig1", "field enhancement eta versus wavelength");
  std::string prisms, panel = "emitted", angle_mode = "resonant";
  fig1->add_option("--lambda-min", lambda_min, "um");
  fig1->add_option("--lambda-max", lambda_max, "um");
  fig1->add_option("--steps", steps);
  fig1->add_option("--prisms", prisms, "comma-separated prism indices, e.g. 1.5,2.0");
  fig1->add_option("--panel", panel, "emitted | excitation")->check(CLI::IsMember({"emitted", "excitation"}));
  fig1->add_option("--angle", angle_mode, "resonant | fixed")->check(CLI::IsMember({"resonant", "fixed"}));

  auto* fig2 = app.add_subcommand("fig2", "SPP effective mode index versus wavelength");
  std::string metal = "silver", dielectric = "vacuum", metal_eps;
  fig2->add_option("--lambda-min", lambda_min, "um");
  fig2->add_option("--lambda-max", lambda_max, "um");
  fig2->add_option("--steps", steps);
  fig2->add_option("--metal", metal);
  fig2->add_option("--dielectric", dielectric);
  fig2->add_option("--metal-eps", metal_eps, "constant metal permittivity RE[,IM]");

  auto* evaluate = app.add_subcommand("evaluate", "full scenario report");

  auto* sweep = app.add_subcommand("sweep", "parameter sweep of eta1 and kappa");
  std::string param = "thickness";
  double from = 20, to = 120;
  std::size_t sweep_steps = 101;
  sweep->add_option("--param", param, "thickness (nm) | angle (phi, deg) | prism-index")
      ->check(CLI::IsMember({"thickness", "angle", "prism-index"}));
  sweep->add_option("--from", from);
  sweep->add_option("--to", to);
  sweep->add_option("--steps", sweep_steps);

  auto* match = app.add_subcommand("match", "phase-matching solution");
  std::optional<double> phi_deg;
  match->add_option("--phi-deg", phi_deg, "pump angle from the interface plane");

  auto* grating = app.add_subcommand("grating", "coupling grating design");
  int order = 1;
  grating->add_option("--order", order);
  grating->add_option("--phi-deg", phi_deg, "pump angle from the interface plane");

  auto* bell = app.add_subcommand("bell", "emitted polarization state and CHSH value");
  double phase = 0.0;
  std::string angles;
  bell->add_option("--phase", phase, "relative phase of |zy> in rad");
  bell->add_option("--angles", angles, "a,a',b,b' in degrees");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    pa::ScenarioConfig config;
    if (!config_path.empty()) config = pa::load_config_file(config_path, config);
    for (const auto& [k, v] : flag_values) config.set(k, v);
    for (const auto& s : settings) {
      const auto eq = s.find('=');
      if (eq == std::string::npos) throw plasmonpair::ParseError("--set expects KEY=VALUE");
      config.set(s.substr(0, eq), s.substr(eq + 1));
    }

    std::ofstream file;
    if (!out_path.empty()) {
      file.open(out_path);
      if (!file) throw plasmonpair::ParseError("cannot open output file '" + out_path + "'");
    }
    std::ostream& out = out_path.empty() ? std::cout : file;

    auto format_or = [&](pa::OutputFormat fallback) {
      if (format_name == "csv") return pa::OutputFormat::csv;
      if (format_name == "json") return pa::OutputFormat::json;
      if (format_name == "text") return pa::OutputFormat::text;
      return fallback;
    };
    auto grid_or = [&](pa::LambdaGrid grid) {
      if (lambda_min > 0) grid.min = lambda_min * 1e-6;
      if (lambda_max > 0) grid.max = lambda_max * 1e-6;
      if (steps > 0) grid.steps = steps;
      return grid;
    };

    if (fig1->parsed()) {
      pa::Fig1Options o;
      o.grid = grid_or(o.grid);
      if (!prisms.empty()) o.prism_indices = parse_list(prisms);
      o.panel = panel == "emitted" ? pa::Fig1Panel::emitted : pa::Fig1Panel::excitation;
      o.angle_mode = angle_mode == "fixed" ? pa::Fig1AngleMode::fixed : pa::Fig1AngleMode::resonant;
      pa::cmd_fig1(config, o, format_or(pa::OutputFormat::csv), out);
    } else if (fig2->parsed()) {
      pa::Fig2Options o;
      o.grid = grid_or(o.grid);
      o.metal = metal;
      o.dielectric = dielectric;
      if (!metal_eps.empty()) {
        const auto parts = parse_list(metal_eps);
        if (parts.empty() || parts.size() > 2) throw plasmonpair::ParseError("--metal-eps expects RE[,IM]");
        o.metal_eps = std::complex<double>(parts[0], parts.size() == 2 ? parts[1] : 0.0);
      }
      pa::cmd_fig2(config, o, format_or(pa::OutputFormat::csv), out);
    } else if (evaluate->parsed()) {
      pa::cmd_evaluate(config, format_or(pa::OutputFormat::text), out);
    } else if (sweep->parsed()) {
      pa::SweepOptions o;
      o.steps = sweep_steps;
      if (param == "thickness") {
        o.parameter = pa::SweepParameter::thickness;
        o.from = from * 1e-9;
        o.to = to * 1e-9;
      } else if (param == "angle") {
        o.parameter = pa::SweepParameter::angle;
        o.from = from * kDeg;
        o.to = to * kDeg;
      } else {
        o.parameter = pa::SweepParameter::prism_index;
        o.from = from;
        o.to = to;
      }
      pa::cmd_sweep(config, o, format_or(pa::OutputFormat::csv), out);
    } else if (match->parsed()) {
      pa::MatchOptions o;
      if (phi_deg) o.phi = *phi_deg * kDeg;
      pa::cmd_match(config, o, format_or(pa::OutputFormat::csv), out);
    } else if (grating->parsed()) {
      pa::GratingOptions o;
      o.order = order;
      if (phi_deg) o.phi = *phi_deg * kDeg;
      pa::cmd_grating(config, o, format_or(pa::OutputFormat::csv), out);
    } else if (bell->parsed()) {
      pa::BellOptions o;
      o.relative_phase = phase;
      if (!angles.empty()) {
        const auto a = parse_list(angles);
        if (a.size() != 4) throw plasmonpair::ParseError("--angles expects four values");
        o.angles = plasmonpair::entangle::ChshAngles{a[0] * kDeg, a[1] * kDeg, a[2] * kDeg, a[3] * kDeg};
      }
      pa::cmd_bell(config, o, format_or(pa::OutputFormat::csv), out);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return pa::exit_code_for(e);
  }
  return 0;
}
