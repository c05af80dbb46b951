#pragma once

#include <complex>
#include <iosfwd>
#include <memory>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "plasmonpair/errors.hpp"

namespace plasmonpair::materials {

using complex = std::complex<double>;

/// One row of an optical-constant table. Wavelength in metres.
struct OpticalSample {
  double lambda_vac;
  double n;
  double k;
};

class MalformedRowError : public ParseError {
 public:
  MalformedRowError(std::size_t line, const std::string& what);
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

class NonMonotonicError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class InsufficientSamplesError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

/// Tabulated complex refractive index n + ik of a material.
///
/// Samples are strictly increasing in wavelength, there are at least two of
/// them, and every n and k is finite and non-negative. The constructor sorts
/// its input, drops exact duplicate rows and enforces the rest.
class OpticalConstantTable {
 public:
  OpticalConstantTable(std::string name, std::vector<OpticalSample> samples, std::string source);

  const std::string& name() const noexcept { return name_; }
  const std::string& source() const noexcept { return source_; }
  const std::vector<OpticalSample>& samples() const noexcept { return samples_; }

  double lambda_min() const noexcept { return samples_.front().lambda_vac; }
  double lambda_max() const noexcept { return samples_.back().lambda_vac; }
  bool contains(double lambda_vac) const noexcept {
    return lambda_vac >= lambda_min() && lambda_vac <= lambda_max();
  }

  /// n + ik at lambda_vac, each of n and k linear in photon energy (1/lambda)
  /// between the bracketing samples. Throws RangeError outside the table.
  complex refractive_index(double lambda_vac) const;

 private:
  std::string name_;
  std::vector<OpticalSample> samples_;
  std::string source_;
};

enum class TableFormat {
  /// Header `lambda_um,n,k`, one sample per line, `#` comment lines.
  csv_lambda_um_n_k,
};

/// Parses an optical-constant table. If `source` is empty the text after a
/// `# Source:` comment (including its continuation comment lines) is used.
OpticalConstantTable load_optical_constants(std::istream& in, std::string name, std::string source = {},
                                            TableFormat format = TableFormat::csv_lambda_um_n_k);
OpticalConstantTable load_optical_constants(std::string_view text, std::string name, std::string source = {},
                                            TableFormat format = TableFormat::csv_lambda_um_n_k);

/// Johnson & Christy silver, shipped as data/silver_jc.csv and compiled in.
std::shared_ptr<const OpticalConstantTable> silver_johnson_christy();

/// A medium with a complex permittivity. Either a lossless constant index or
/// a tabulated metal.
class Material {
 public:
  static Material constant_index(double n, std::string name = {});
  static Material tabulated(std::shared_ptr<const OpticalConstantTable> table);

  const std::string& name() const noexcept { return name_; }
  bool is_lossless() const noexcept { return std::holds_alternative<double>(kind_); }
  bool is_tabulated() const noexcept { return !is_lossless(); }

  /// Only meaningful for lossless materials; throws ValidationError otherwise.
  double real_index() const;
  const OpticalConstantTable& table() const;

  /// Complex refractive index at lambda_vac (metres).
  complex refractive_index(double lambda_vac) const;

 private:
  Material(std::variant<double, std::shared_ptr<const OpticalConstantTable>> kind, std::string name)
      : kind_(std::move(kind)), name_(std::move(name)) {}

  std::variant<double, std::shared_ptr<const OpticalConstantTable>> kind_;
  std::string name_;
};

/// eps = (n + ik)^2. Constant-index media return exactly n^2 + 0i.
/// Tabulated media throw RangeError outside their table; no extrapolation.
complex permittivity(const Material& material, double lambda_vac);

Material vacuum();
Material silver();

}  // namespace plasmonpair::materials
