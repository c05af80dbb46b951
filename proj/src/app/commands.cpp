#include "plasmonpair/app/commands.hpp"

#include <cmath>
#include <ostream>
#include <variant>

#include <json.hpp>

#include "plasmonpair/constants.hpp"

#ifndef PLASMONPAIR_VERSION
#define PLASMONPAIR_VERSION "0.0.0"
#endif

namespace plasmonpair::app {

namespace {

using json = nlohmann::ordered_json;
constexpr double kDeg = constants::pi / 180.0;
constexpr double kUm = constants::micrometre;

json num(double v) {
  if (!std::isfinite(v)) return format_number(v);
  return parse_number(format_number(v));
}

using Value = std::variant<double, std::string, bool, long long>;

std::string render(const Value& v) {
  return std::visit(
      [](const auto& x) -> std::string {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, double>) return format_number(x);
        else if constexpr (std::is_same_v<T, std::string>) return x;
        else if constexpr (std::is_same_v<T, bool>) return x ? "true" : "false";
        else return std::to_string(x);
      },
      v);
}

json to_json(const Value& v) {
  return std::visit(
      [](const auto& x) -> json {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, double>) return num(x);
        else return json(x);
      },
      v);
}

/// Ordered key/value report rendered as CSV, JSON or aligned text.
class Record {
 public:
  Record& add(std::string key, Value v) {
    fields_.emplace_back(std::move(key), std::move(v));
    return *this;
  }

  void write(std::ostream& out, OutputFormat format, const std::vector<std::string>& provenance) const {
    switch (format) {
      case OutputFormat::csv:
        for (const auto& p : provenance) out << "# " << p << '\n';
        out << "quantity,value\n";
        for (const auto& [k, v] : fields_) out << k << ',' << render(v) << '\n';
        break;
      case OutputFormat::text: {
        for (const auto& p : provenance) out << "# " << p << '\n';
        std::size_t width = 0;
        for (const auto& f : fields_) width = std::max(width, f.first.size());
        for (const auto& [k, v] : fields_) out << k << std::string(width - k.size() + 2, ' ') << render(v) << '\n';
        break;
      }
      case OutputFormat::json: {
        json j;
        j["provenance"] = provenance_json(provenance);
        for (const auto& [k, v] : fields_) j[k] = to_json(v);
        out << j.dump(2) << '\n';
        break;
      }
    }
  }

  static json provenance_json(const std::vector<std::string>& provenance) {
    json p = json::object();
    for (const auto& line : provenance) {
      const auto eq = line.find('=');
      if (eq == std::string::npos) p["tool"] = line;
      else p[line.substr(0, eq)] = line.substr(eq + 1);
    }
    return p;
  }

 private:
  std::vector<std::pair<std::string, Value>> fields_;
};

/// Column-oriented data series with optional trailing comment lines.
struct Series {
  std::vector<std::string> columns;
  std::vector<std::vector<Value>> rows;
  std::vector<std::string> footer;
  std::vector<std::pair<std::string, Value>> meta;  // preceding comment line(s)
};

void write_series(std::ostream& out, OutputFormat format, const std::vector<std::string>& provenance,
                  const std::vector<Series>& blocks) {
  if (format == OutputFormat::json) {
    json j;
    j["provenance"] = Record::provenance_json(provenance);
    json arr = json::array();
    for (const auto& b : blocks) {
      json block;
      for (const auto& [k, v] : b.meta) block[k] = to_json(v);
      json rows = json::array();
      for (const auto& r : b.rows) {
        json row;
        for (std::size_t i = 0; i < b.columns.size(); ++i) row[b.columns[i]] = to_json(r[i]);
        rows.push_back(std::move(row));
      }
      block["rows"] = std::move(rows);
      if (!b.footer.empty()) block["summary"] = b.footer;
      arr.push_back(std::move(block));
    }
    j["series"] = std::move(arr);
    out << j.dump(2) << '\n';
    return;
  }
  for (const auto& p : provenance) out << "# " << p << '\n';
  for (const auto& b : blocks) {
    for (const auto& [k, v] : b.meta) out << "# " << k << '=' << render(v) << '\n';
    for (std::size_t i = 0; i < b.columns.size(); ++i) out << (i ? "," : "") << b.columns[i];
    out << '\n';
    for (const auto& r : b.rows) {
      for (std::size_t i = 0; i < r.size(); ++i) out << (i ? "," : "") << render(r[i]);
      out << '\n';
    }
    for (const auto& f : b.footer) out << "# " << f << '\n';
  }
}

std::vector<std::string> provenance(const char* command, const ScenarioConfig& config, const std::string& source) {
  return {"plasmonpair " + tool_version(), "command=" + std::string(command), "config_hash=" + config.hash(),
          "data_source=" + source};
}

std::string data_source_of(const materials::Material& m) {
  return m.is_tabulated() ? m.table().source() : std::string("constant index");
}

}  // namespace

std::string tool_version() { return PLASMONPAIR_VERSION; }

std::vector<double> LambdaGrid::values() const {
  if (steps == 0) throw ValidationError("wavelength grid needs at least one point");
  if (!(min > 0.0) || !(max >= min)) throw ValidationError("wavelength grid bounds must be positive and ordered");
  std::vector<double> out(steps);
  for (std::size_t i = 0; i < steps; ++i)
    out[i] = steps == 1 ? min : min + (max - min) * static_cast<double>(i) / static_cast<double>(steps - 1);
  return out;
}

void cmd_fig1(const ScenarioConfig& config, const Fig1Options& options, OutputFormat format, std::ostream& out) {
  using stratified::Polarization;
  const MaterialLibrary library(config);
  const auto grid = options.grid.values();
  auto prisms = options.prism_indices;
  if (prisms.empty()) prisms.push_back(config.prism_index);

  std::vector<Series> blocks;
  for (double n0 : prisms) {
    const auto stack = build_stack(config, library, n0);
    std::optional<double> fixed_theta;
    if (options.angle_mode == Fig1AngleMode::fixed) {
      fixed_theta = config.angle_phi ? constants::pi / 2.0 - *config.angle_phi
                                     : stratified::resonance_angle(stack, config.lambda_pair).angle_from_normal;
    }
    Series s;
    s.columns = {"lambda_um", "eta"};
    s.meta = {{"prism_index", n0},
              {"panel", std::string(options.panel == Fig1Panel::emitted ? "emitted" : "excitation")},
              {"angle", std::string(fixed_theta ? "fixed" : "resonant")}};
    if (fixed_theta) {
      s.meta.emplace_back("theta_deg", *fixed_theta / kDeg);
      s.meta.emplace_back("phi_deg", 90.0 - *fixed_theta / kDeg);
    }
    double peak_eta = -1.0, peak_lambda = 0.0;
    for (double lambda : grid) {
      const double theta = fixed_theta ? *fixed_theta : stratified::resonance_angle(stack, lambda).angle_from_normal;
      const double probe = options.panel == Fig1Panel::emitted ? lambda : 0.5 * lambda;
      const double eta = stratified::stack_response(stack, {probe, Polarization::p, theta}).eta;
      s.rows.push_back({lambda / kUm, eta});
      if (eta > peak_eta) peak_eta = eta, peak_lambda = lambda;
    }
    s.footer.push_back("max eta=" + format_number(peak_eta) + " lambda_um=" + format_number(peak_lambda / kUm));
    blocks.push_back(std::move(s));
  }
  write_series(out, format, provenance("fig1", config, data_source_of(library.resolve(config.film_material))),
               blocks);
}

void cmd_fig2(const ScenarioConfig& config, const Fig2Options& options, OutputFormat format, std::ostream& out) {
  const MaterialLibrary library(config);
  const auto dielectric = library.resolve(options.dielectric);
  std::optional<materials::Material> metal;
  if (!options.metal_eps) metal = library.resolve(options.metal);

  Series s;
  s.columns = {"lambda_um", "re_nsp", "im_nsp"};
  s.meta = {{"metal", options.metal_eps ? std::string("constant-eps") : options.metal},
            {"dielectric", options.dielectric}};
  for (double lambda : options.grid.values()) {
    const auto eps_m = options.metal_eps ? *options.metal_eps : materials::permittivity(*metal, lambda);
    const auto mode = spp::spp_mode(eps_m, materials::permittivity(dielectric, lambda), lambda);
    s.rows.push_back({lambda / kUm, mode.n_sp.real(), mode.n_sp.imag()});
  }
  const std::string source = metal ? data_source_of(*metal) : std::string("constant permittivity");
  write_series(out, format, provenance("fig2", config, source), {s});
}

void cmd_evaluate(const ScenarioConfig& config, OutputFormat format, std::ostream& out) {
  const auto rep = evaluate(config);
  Record r;
  r.add("prism_index", config.prism_index)
      .add("film_material", config.film_material)
      .add("film_thickness_nm", config.film_thickness / constants::nanometre)
      .add("exit_medium", config.exit_medium)
      .add("lambda_pair_um", config.lambda_pair / kUm)
      .add("lambda_pump_um", 0.5 * config.lambda_pair / kUm)
      .add("re_nsp", rep.mode.n_sp.real())
      .add("im_nsp", rep.mode.n_sp.imag())
      .add("im_k_per_m", rep.mode.k.imag())
      .add("spp_propagation_length_m", rep.mode.L_prop)
      .add("phi0_deg", rep.kretschmann.phi_from_plane / kDeg)
      .add("theta0_deg", rep.kretschmann.theta_from_normal / kDeg)
      .add("resonance_theta_deg", rep.resonance.angle_from_normal / kDeg)
      .add("resonance_phi_deg", 90.0 - rep.resonance.angle_from_normal / kDeg)
      .add("resonance_reflectance", rep.resonance.reflectance)
      .add("operating_phi_deg", rep.phi / kDeg)
      .add("operating_theta_deg", rep.theta / kDeg)
      .add("angle_overridden", rep.angle_overridden)
      .add("regime", std::string(phasematch::to_string(rep.regime)));
  if (rep.match) {
    r.add("omega1_rad_per_s", rep.match->omega1)
        .add("omega2_rad_per_s", rep.match->omega2)
        .add("match_residual_per_m", rep.match->residual);
  }
  r.add("eta0", rep.eta0).add("eta1", rep.eta1).add("eta2", rep.eta2);
  r.add("l_delta_m", rep.l_delta).add("l_delta_overridden", rep.l_delta_overridden);
  if (rep.yield) {
    const auto& y = *rep.yield;
    r.add("chi2_eff_m_per_V", spdc::effective_chi2(config.chi2, rep.eta0, rep.eta1, rep.eta2));
    if (y.F) r.add("pump_field_V_per_m", config.pump_field).add("F", *y.F).add("N1", *y.N1);
    // The ordinary-crystal comparison point: no enhancement, 1 mm interaction.
    auto ordinary = y.inputs;
    ordinary.eta0 = ordinary.eta1 = ordinary.eta2 = 1.0;
    ordinary.l_delta = 1e-3;
    const double kappa_ordinary = spdc::yield_kappa(ordinary).kappa;
    r.add("kappa", y.kappa)
        .add("kappa_baseline", y.kappa_baseline)
        .add("enhancement_gain", y.enhancement_gain)
        .add("kappa_ordinary_1mm", kappa_ordinary)
        .add("gain_vs_ordinary_1mm", y.kappa / kappa_ordinary)
        .add("loss_factor", config.loss_factor)
        .add("kappa_reference_ordinary", kReferenceKappaOrdinary)
        .add("kappa_reference_plasmonic", kReferenceKappaPlasmonic)
        .add("kappa_log10_offset_vs_reference", std::log10(y.kappa / kReferenceKappaPlasmonic));
  } else {
    r.add("kappa", std::string("suppressed (no SPDC: pump polarization outruns the plasmons)"));
  }
  if (rep.grating) {
    r.add("grating_order", static_cast<long long>(rep.grating->order))
        .add("grating_period_um", rep.grating->period / kUm)
        .add("grating_k_a_per_m", rep.grating->k_a)
        .add("grating_round_trip_residual", rep.grating->round_trip_residual)
        .add("grating_designed", rep.grating->designed);
  }
  r.add("chsh_optimum", rep.chsh.S)
      .add("chsh_a_deg", rep.chsh.angles.a / kDeg)
      .add("chsh_a_prime_deg", rep.chsh.angles.a_prime / kDeg)
      .add("chsh_b_deg", rep.chsh.angles.b / kDeg)
      .add("chsh_b_prime_deg", rep.chsh.angles.b_prime / kDeg);
  r.write(out, format, provenance("evaluate", config, rep.data_source));
}

void cmd_sweep(const ScenarioConfig& config, const SweepOptions& options, OutputFormat format, std::ostream& out) {
  if (options.steps == 0) throw ValidationError("sweep needs at least one step");
  if (!std::isfinite(options.from) || !std::isfinite(options.to) || options.to < options.from)
    throw ValidationError("sweep range must be finite and ordered");
  const char* column = "thickness_nm";
  const char* key = "film_thickness_nm";
  double unit = constants::nanometre;
  if (options.parameter == SweepParameter::angle) {
    column = "phi_deg";
    key = "angle_phi_deg";
    unit = kDeg;
  } else if (options.parameter == SweepParameter::prism_index) {
    column = "prism_index";
    key = "prism_index";
    unit = 1.0;
  }

  Series s;
  s.columns = {column, "theta_deg", "eta1", "kappa", "regime"};
  std::string source;
  double best_value = 0.0, best_eta = -1.0;
  for (std::size_t i = 0; i < options.steps; ++i) {
    const double v = options.steps == 1 ? options.from
                                        : options.from + (options.to - options.from) * static_cast<double>(i) /
                                                             static_cast<double>(options.steps - 1);
    // Each point goes through the printed value so that `evaluate` with the
    // same setting reproduces the row digit for digit.
    const std::string printed = format_number(v / unit);
    ScenarioConfig cfg = config;
    cfg.set(key, printed);
    const auto rep = evaluate(cfg);
    source = rep.data_source;
    const double kappa = rep.yield ? rep.yield->kappa : 0.0;
    s.rows.push_back({parse_number(printed), rep.theta / kDeg, rep.eta1, kappa, std::string(phasematch::to_string(rep.regime))});
    if (rep.eta1 > best_eta) {
      best_eta = rep.eta1;
      best_value = parse_number(printed);
    }
  }
  s.footer.push_back(std::string("argmax ") + column + "=" + format_number(best_value) +
                     " eta1=" + format_number(best_eta));
  write_series(out, format, provenance("sweep", config, source), {s});
}

void cmd_match(const ScenarioConfig& config, const MatchOptions& options, OutputFormat format, std::ostream& out) {
  const MaterialLibrary library(config);
  const auto metal = library.resolve(config.film_material);
  const auto dispersion = spp::interface_dispersion(metal, library.resolve(config.exit_medium));
  const double omega0 = 4.0 * constants::pi * constants::c0 / config.lambda_pair;
  const auto degenerate = phasematch::degenerate_match(omega0, config.prism_index, dispersion);
  const auto phi = options.phi ? options.phi : config.angle_phi;

  Record r;
  r.add("omega0_rad_per_s", omega0)
      .add("phi0_deg", degenerate.phi0 / kDeg)
      .add("theta0_deg", 90.0 - degenerate.phi0 / kDeg)
      .add("phi_deg", (phi ? *phi : degenerate.phi0) / kDeg);
  const auto regime = phi ? phasematch::classify_regime(*phi, degenerate.phi0) : phasematch::Regime::degenerate;
  r.add("regime", std::string(phasematch::to_string(regime)));
  if (regime != phasematch::Regime::superluminal_no_spdc) {
    const auto s = regime == phasematch::Regime::degenerate
                       ? degenerate.solution
                       : phasematch::nondegenerate_match(omega0, config.prism_index, *phi, dispersion);
    r.add("omega1_rad_per_s", s.omega1)
        .add("omega2_rad_per_s", s.omega2)
        .add("lambda1_um", constants::vacuum_wavelength(s.omega1) / kUm)
        .add("lambda2_um", constants::vacuum_wavelength(s.omega2) / kUm)
        .add("k1_per_m", s.k1)
        .add("k2_per_m", s.k2)
        .add("residual_per_m", s.residual);
  }
  r.write(out, format, provenance("match", config, data_source_of(metal)));
}

void cmd_grating(const ScenarioConfig& config, const GratingOptions& options, OutputFormat format,
                 std::ostream& out) {
  const MaterialLibrary library(config);
  const auto metal = library.resolve(config.film_material);
  const auto dispersion = spp::interface_dispersion(metal, library.resolve(config.exit_medium));
  const double omega0 = 4.0 * constants::pi * constants::c0 / config.lambda_pair;
  const double phi = options.phi ? *options.phi
                     : config.angle_phi ? *config.angle_phi
                                        : phasematch::degenerate_match(omega0, config.prism_index, dispersion).phi0;
  const double k_par = phasematch::PumpGeometry{omega0, config.prism_index, phi}.k_par();
  const auto grating = phasematch::design_grating_period(omega0, k_par, dispersion, options.order);
  const double k_spp = dispersion(omega0).k.real();

  Record r;
  r.add("phi_deg", phi / kDeg)
      .add("k_par_pump_per_m", k_par)
      .add("k_spp_pump_per_m", k_spp)
      .add("order", static_cast<long long>(grating.order()))
      .add("k_a_per_m", grating.k_a())
      .add("period_um", grating.period() / kUm)
      .add("round_trip_residual", phasematch::grating_round_trip_residual(omega0, k_par, dispersion, grating));
  for (const auto& f : spp::fold_wavevector(k_spp, grating, grating.order()))
    r.add("k_folded_n" + std::to_string(f.order) + "_per_m", f.k);
  r.write(out, format, provenance("grating", config, data_source_of(metal)));
}

void cmd_bell(const ScenarioConfig& config, const BellOptions& options, OutputFormat format, std::ostream& out) {
  const auto state = entangle::emitted_state({{'y', 'y', 'z'}, {'y', 'z', 'y'}}, options.relative_phase);
  const auto& a = state.amplitudes();
  Record r;
  const char* names[] = {"yy", "yz", "zy", "zz"};
  for (std::size_t i = 0; i < 4; ++i) {
    r.add(std::string("amp_") + names[i] + "_re", a[i].real());
    r.add(std::string("amp_") + names[i] + "_im", a[i].imag());
  }
  r.add("separable", entangle::is_separable(state));
  const std::pair<int, int> settings[] = {{0, 0}, {0, 90}, {90, 0}, {90, 90}, {45, 45}, {45, -45}};
  for (const auto& [s, i] : settings) {
    r.add("p_coinc_" + std::to_string(s) + "_" + std::to_string(i),
          entangle::coincidence_probability(state, entangle::Analyzer(s * kDeg), entangle::Analyzer(i * kDeg)));
  }
  const auto opt = entangle::chsh_optimum(state);
  r.add("chsh_optimum", opt.S)
      .add("chsh_a_deg", opt.angles.a / kDeg)
      .add("chsh_a_prime_deg", opt.angles.a_prime / kDeg)
      .add("chsh_b_deg", opt.angles.b / kDeg)
      .add("chsh_b_prime_deg", opt.angles.b_prime / kDeg);
  if (options.angles) r.add("chsh_at_given_angles", entangle::chsh_value(state, *options.angles));
  r.write(out, format, provenance("bell", config, "none"));
}

int exit_code_for(const std::exception& e) {
  if (dynamic_cast<const ParseError*>(&e) || dynamic_cast<const ValidationError*>(&e)) return 2;
  if (dynamic_cast<const RangeError*>(&e) || dynamic_cast<const PhysicsError*>(&e)) return 3;
  return 4;
}

}  // namespace plasmonpair::app
