#include "plasmonpair/materials.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <istream>
#include <sstream>

#include "plasmonpair/constants.hpp"

namespace plasmonpair::materials {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

bool parse_double(std::string_view field, double& out) {
  field = trim(field);
  if (field.empty()) return false;
  if (field.front() == '+') field.remove_prefix(1);
  const auto* end = field.data() + field.size();
  auto [ptr, ec] = std::from_chars(field.data(), end, out);
  return ec == std::errc{} && ptr == end && std::isfinite(out);
}

}  // namespace

MalformedRowError::MalformedRowError(std::size_t line, const std::string& what)
    : ParseError("line " + std::to_string(line) + ": " + what), line_(line) {}

OpticalConstantTable::OpticalConstantTable(std::string name, std::vector<OpticalSample> samples,
                                           std::string source)
    : name_(std::move(name)), source_(std::move(source)) {
  for (const auto& s : samples) {
    if (!std::isfinite(s.lambda_vac) || s.lambda_vac <= 0.0)
      throw ValidationError("optical-constant table '" + name_ + "': wavelength must be positive and finite");
    if (!std::isfinite(s.n) || !std::isfinite(s.k) || s.n < 0.0 || s.k < 0.0)
      throw ValidationError("optical-constant table '" + name_ + "': n and k must be finite and non-negative");
  }
  std::stable_sort(samples.begin(), samples.end(),
                   [](const OpticalSample& a, const OpticalSample& b) { return a.lambda_vac < b.lambda_vac; });
  for (const auto& s : samples) {
    if (!samples_.empty() && samples_.back().lambda_vac == s.lambda_vac) {
      if (samples_.back().n == s.n && samples_.back().k == s.k) continue;
      throw NonMonotonicError("optical-constant table '" + name_ +
                              "': conflicting samples at the same wavelength");
    }
    samples_.push_back(s);
  }
  if (samples_.size() < 2)
    throw InsufficientSamplesError("optical-constant table '" + name_ + "': insufficient samples (need at least 2)");
}

complex OpticalConstantTable::refractive_index(double lambda_vac) const {
  if (!contains(lambda_vac)) {
    std::ostringstream msg;
    msg << "wavelength " << lambda_vac / constants::micrometre << " um outside table '" << name_ << "' range ["
        << lambda_min() / constants::micrometre << ", " << lambda_max() / constants::micrometre << "] um";
    throw RangeError(msg.str());
  }
  auto hi = std::lower_bound(samples_.begin(), samples_.end(), lambda_vac,
                             [](const OpticalSample& s, double l) { return s.lambda_vac < l; });
  if (hi->lambda_vac == lambda_vac) return {hi->n, hi->k};
  const auto lo = std::prev(hi);
  const double e = 1.0 / lambda_vac;
  const double e_lo = 1.0 / lo->lambda_vac;
  const double e_hi = 1.0 / hi->lambda_vac;
  const double t = (e - e_lo) / (e_hi - e_lo);
  return {lo->n + t * (hi->n - lo->n), lo->k + t * (hi->k - lo->k)};
}

OpticalConstantTable load_optical_constants(std::istream& in, std::string name, std::string source,
                                            TableFormat format) {
  (void)format;  // only one format for now
  std::vector<OpticalSample> samples;
  std::string source_from_comments;
  bool in_source_block = false;
  bool header_seen = false;
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const auto line = trim(raw);
    if (line.empty()) {
      in_source_block = false;
      continue;
    }
    if (line.front() == '#') {
      auto body = trim(line.substr(1));
      if (body.rfind("Source:", 0) == 0) {
        source_from_comments = std::string(trim(body.substr(7)));
        in_source_block = true;
      } else if (in_source_block && !body.empty()) {
        source_from_comments += " ";
        source_from_comments += body;
      }
      continue;
    }
    in_source_block = false;
    if (!header_seen) {
      if (line != "lambda_um,n,k")
        throw MalformedRowError(line_no, "expected header 'lambda_um,n,k', got '" + std::string(line) + "'");
      header_seen = true;
      continue;
    }
    std::string_view fields[3];
    std::string_view rest = line;
    std::size_t count = 0;
    while (true) {
      const auto comma = rest.find(',');
      if (count == 3) {
        count = 4;
        break;
      }
      fields[count++] = rest.substr(0, comma);
      if (comma == std::string_view::npos) break;
      rest.remove_prefix(comma + 1);
    }
    if (count != 3) throw MalformedRowError(line_no, "expected 3 comma-separated fields");
    double lambda_um = 0, n = 0, k = 0;
    if (!parse_double(fields[0], lambda_um) || !parse_double(fields[1], n) || !parse_double(fields[2], k))
      throw MalformedRowError(line_no, "non-numeric field in '" + std::string(line) + "'");
    if (lambda_um <= 0.0) throw MalformedRowError(line_no, "wavelength must be positive");
    if (n < 0.0 || k < 0.0) throw MalformedRowError(line_no, "n and k must be non-negative");
    samples.push_back({lambda_um * constants::micrometre, n, k});
  }
  if (source.empty()) source = std::move(source_from_comments);
  return OpticalConstantTable(std::move(name), std::move(samples), std::move(source));
}

OpticalConstantTable load_optical_constants(std::string_view text, std::string name, std::string source,
                                            TableFormat format) {
  std::istringstream in{std::string(text)};
  return load_optical_constants(in, std::move(name), std::move(source), format);
}

Material Material::constant_index(double n, std::string name) {
  if (!std::isfinite(n) || n <= 0.0) throw ValidationError("constant refractive index must be positive and finite");
  if (name.empty()) {
    std::ostringstream s;
    s << "n=" << n;
    name = s.str();
  }
  return Material(n, std::move(name));
}

Material Material::tabulated(std::shared_ptr<const OpticalConstantTable> table) {
  if (!table) throw ValidationError("null optical-constant table");
  auto name = table->name();
  return Material(std::move(table), std::move(name));
}

double Material::real_index() const {
  if (const auto* n = std::get_if<double>(&kind_)) return *n;
  throw ValidationError("material '" + name_ + "' is not a constant-index medium");
}

const OpticalConstantTable& Material::table() const {
  if (const auto* t = std::get_if<std::shared_ptr<const OpticalConstantTable>>(&kind_)) return **t;
  throw ValidationError("material '" + name_ + "' is not tabulated");
}

complex Material::refractive_index(double lambda_vac) const {
  if (const auto* n = std::get_if<double>(&kind_)) return {*n, 0.0};
  return std::get<std::shared_ptr<const OpticalConstantTable>>(kind_)->refractive_index(lambda_vac);
}

complex permittivity(const Material& material, double lambda_vac) {
  if (material.is_lossless()) {
    const double n = material.real_index();
    return {n * n, 0.0};
  }
  const auto nk = material.refractive_index(lambda_vac);
  return nk * nk;
}

Material vacuum() { return Material::constant_index(1.0, "vacuum"); }

Material silver() { return Material::tabulated(silver_johnson_christy()); }

}  // namespace plasmonpair::materials
