#include <doctest.h>

#include "approx.hpp"

#include <cmath>
#include <sstream>

#include "plasmonpair/materials.hpp"

using namespace plasmonpair;
using namespace plasmonpair::materials;

namespace {

// (n + ik)^2 written out by hand.
complex square_index(double n, double k) { return {n * n - k * k, 2.0 * n * k}; }

double rel(complex a, complex b) { return std::abs(a - b) / std::abs(b); }

}  // namespace

TEST_CASE("two-row table parses to metres") {
  const auto t = load_optical_constants("lambda_um,n,k\n1.0,0.2,6.8\n1.2,0.3,8.0\n", "toy");
  REQUIRE(t.samples().size() == 2);
  CHECK(t.samples()[0].lambda_vac == approx(1.0e-6).epsilon(1e-15));
  CHECK(t.samples()[1].lambda_vac == approx(1.2e-6).epsilon(1e-15));
  CHECK(t.samples()[1].k == 8.0);
  CHECK(t.name() == "toy");
}

TEST_CASE("empty or header-only input has too few samples") {
  CHECK_THROWS_AS(load_optical_constants("", "x"), InsufficientSamplesError);
  CHECK_THROWS_AS(load_optical_constants("lambda_um,n,k\n", "x"), InsufficientSamplesError);
  CHECK_THROWS_AS(load_optical_constants("lambda_um,n,k\n1.0,0.2,6.8\n", "x"), InsufficientSamplesError);
}

TEST_CASE("malformed rows report their line") {
  try {
    load_optical_constants("lambda_um,n,k\n1.0,0.2,6.8\n1.1,abc,7\n", "x");
    FAIL("expected a parse error");
  } catch (const MalformedRowError& e) {
    CHECK(e.line() == 3);
  }
  CHECK_THROWS_AS(load_optical_constants("wavelength,n,k\n1.0,0.2,6.8\n1.2,0.3,8\n", "x"), ParseError);
  CHECK_THROWS_AS(load_optical_constants("lambda_um,n,k\n1.0,0.2\n1.2,0.3,8\n", "x"), ParseError);
  CHECK_THROWS_AS(load_optical_constants("lambda_um,n,k\n1.0,0.2,-1\n1.2,0.3,8\n", "x"), ParseError);
}

TEST_CASE("rows are sorted and conflicting duplicates rejected") {
  const auto t = load_optical_constants("lambda_um,n,k\n1.2,0.3,8.0\n1.0,0.2,6.8\n1.0,0.2,6.8\n", "x");
  REQUIRE(t.samples().size() == 2);
  CHECK(t.lambda_min() < t.lambda_max());
  CHECK_THROWS_AS(load_optical_constants("lambda_um,n,k\n1.0,0.2,6.8\n1.0,0.3,6.8\n1.2,0.3,8\n", "x"),
                  NonMonotonicError);
}

TEST_CASE("source comment is picked up") {
  std::istringstream in("# Source: somebody\n#   and a journal\nlambda_um,n,k\n1,1,1\n2,1,1\n");
  const auto t = load_optical_constants(in, "x");
  CHECK(t.source().find("somebody") != std::string::npos);
  CHECK(t.source().find("journal") != std::string::npos);
  CHECK(load_optical_constants("lambda_um,n,k\n1,1,1\n2,1,1\n", "x", "given").source() == "given");
}

TEST_CASE("bundled silver spans the near infrared") {
  const auto& t = *silver_johnson_christy();
  CHECK(t.lambda_min() == approx(0.1879e-6));
  CHECK(t.lambda_max() == approx(1.937e-6));
  CHECK(t.source().find("Johnson") != std::string::npos);
}

TEST_CASE("constant media are exact") {
  CHECK(permittivity(vacuum(), 0.7e-6) == complex(1.0, 0.0));
  CHECK(permittivity(Material::constant_index(1.5), 1e-6) == complex(2.25, 0.0));
  CHECK(Material::constant_index(1.5).is_lossless());
  CHECK_THROWS_AS(silver().real_index(), ValidationError);
  CHECK_THROWS_AS(Material::constant_index(-1.0), ValidationError);
}

TEST_CASE("silver at one micron") {
  // Bracketing rows 0.9840 um (0.04, 6.992) and 1.0880 um (0.04, 7.795),
  // interpolated linearly in 1/lambda.
  const double w = (1.0 / 1.0 - 1.0 / 0.984) / (1.0 / 1.088 - 1.0 / 0.984);
  const double k = 6.992 + w * (7.795 - 6.992);
  const complex expected = square_index(0.04, k);
  const complex eps = permittivity(silver(), 1e-6);
  CHECK(rel(eps, expected) < 1e-12);
  CHECK(eps.real() == approx(-50.7839).epsilon(1e-5));
  CHECK(eps.imag() == approx(0.57014).epsilon(1e-4));
}

TEST_CASE("no extrapolation") {
  CHECK_THROWS_AS(permittivity(silver(), 0.1e-6), RangeError);
  CHECK_THROWS_AS(permittivity(silver(), 2.0e-6), RangeError);
  CHECK_NOTHROW(permittivity(silver(), silver_johnson_christy()->lambda_max()));
}

TEST_CASE("tabulated samples convert exactly and metals have negative real part") {
  for (const auto& s : silver_johnson_christy()->samples()) {
    const complex eps = permittivity(silver(), s.lambda_vac);
    CHECK(rel(eps, square_index(s.n, s.k)) < 1e-12);
    if (s.n < s.k) {
      CHECK(eps.real() < 0.0);
      CHECK(eps.imag() == approx(2.0 * s.n * s.k).epsilon(1e-12));
    }
  }
}

TEST_CASE("permittivity is continuous") {
  // The relative change over one picometre is set by the physical slope of
  // the data (a few 1e-6 in the near infrared, more at the plasma edge where
  // eps crosses zero); what matters is that it shrinks linearly with the
  // step and shows no jump at the tabulated nodes.
  const double h = 1e-12;
  auto check_at = [&](double l) {
    const complex a = permittivity(silver(), l - h);
    const complex b = permittivity(silver(), l + h);
    const complex m = permittivity(silver(), l);
    CHECK(std::abs(b - a) / std::abs(m) < 1e-3);
    const complex half = permittivity(silver(), l + 0.5 * h);
    CHECK(std::abs(half - m) <= 0.51 * std::abs(b - m) + 1e-12 * std::abs(m));
  };
  for (double l = 0.2e-6; l < 1.93e-6; l += 0.0137e-6) check_at(l);
  const auto& samples = silver_johnson_christy()->samples();
  for (std::size_t i = 1; i + 1 < samples.size(); ++i) check_at(samples[i].lambda_vac);
  for (double l = 0.7e-6; l < 1.6e-6; l += 0.0137e-6) {
    const complex a = permittivity(silver(), l);
    CHECK(std::abs(permittivity(silver(), l + h) - a) / std::abs(a) < 1e-5);
  }
}
