#include <doctest.h>

#include "approx.hpp"

#include <cmath>
#include <vector>

#include "plasmonpair/constants.hpp"
#include "plasmonpair/materials.hpp"
#include "plasmonpair/phasematch.hpp"
#include "oracles.hpp"

using namespace plasmonpair;
using namespace plasmonpair::phasematch;

namespace {

constexpr double deg = constants::pi / 180.0;
const double omega_pair_1um = constants::angular_frequency(1e-6);
const double omega0_1um = 2.0 * omega_pair_1um;

Dispersion constant_index(double n_sp) {
  return {[n_sp](double w) { return oracles::lossless_mode(w, n_sp); }};
}

using LinearToy = oracles::LinearDispersion;

Dispersion air_silver() { return spp::interface_dispersion(materials::silver(), materials::vacuum()); }

}  // namespace

TEST_CASE("degenerate matching with a constant mode index") {
  const auto m = degenerate_match(omega0_1um, 1.5, constant_index(1.2));
  CHECK(m.phi0 == approx(std::acos(0.8)).epsilon(1e-15));
  CHECK(m.phi0 / deg == approx(36.8699).epsilon(1e-5));
  CHECK(m.solution.omega1 == 0.5 * omega0_1um);
  CHECK(m.solution.k1 == approx(omega0_1um / (2.0 * constants::c0) * 1.2).epsilon(1e-15));
  CHECK(m.solution.k1 == m.solution.k2);
  CHECK(m.solution.regime == Regime::degenerate);
}

TEST_CASE("degenerate matching at the air-silver interface") {
  const auto m = degenerate_match(omega0_1um, 1.5, air_silver());
  CHECK(m.phi0 / deg == approx(47.6755).epsilon(1e-5));
  CHECK(m.solution.omega1 == approx(1.88e15).epsilon(2e-3));
  CHECK_THROWS_AS(degenerate_match(omega0_1um, 1.0, air_silver()), PhysicsError);
}

TEST_CASE("regime classification") {
  const double phi0 = 0.8;
  CHECK(classify_regime(phi0, phi0) == Regime::degenerate);
  CHECK(classify_regime(phi0 + 0.01, phi0) == Regime::superluminal_no_spdc);
  CHECK(classify_regime(phi0 - 0.01, phi0) == Regime::nondegenerate);
  CHECK(to_string(Regime::superluminal_no_spdc) == "superluminal-no-SPDC");
}

TEST_CASE("non-degenerate solver reduces to the degenerate pair at phi0") {
  for (const auto& d : {air_silver(), constant_index(1.2), LinearToy{1.0, 0.1 / omega0_1um}.dispersion()}) {
    const auto deg_match = degenerate_match(omega0_1um, 1.5, d);
    const auto s = nondegenerate_match(omega0_1um, 1.5, deg_match.phi0, d);
    CHECK(std::abs(s.omega1 - 0.5 * omega0_1um) <= 1e-10 * omega0_1um);
    CHECK_THROWS_AS(nondegenerate_match(omega0_1um, 1.5, deg_match.phi0 + 1e-3, d), RegimeError);
  }
}

TEST_CASE("linear dispersion closed form") {
  const LinearToy toy{1.0, 0.1 / omega0_1um};
  const auto d = toy.dispersion();
  const double phi0 = degenerate_match(omega0_1um, 1.5, d).phi0;
  for (double detune : {0.2, 0.5, 1.0, 2.0}) {
    const double phi = phi0 - detune * deg;
    const auto s = nondegenerate_match(omega0_1um, 1.5, phi, d);
    const double expected = toy.omega1(omega0_1um, PumpGeometry{omega0_1um, 1.5, phi}.k_par());
    CHECK(std::abs(s.omega1 - expected) <= 1e-9 * expected);
    CHECK(s.omega1 < 0.5 * omega0_1um);
    CHECK(s.omega2 == omega0_1um - s.omega1);
  }
}

TEST_CASE("air-silver non-degenerate pairs against a dense scan") {
  const auto d = air_silver();
  const double phi = degenerate_match(omega0_1um, 1.5, d).phi0 - 0.1 * deg;
  const double k_par = PumpGeometry{omega0_1um, 1.5, phi}.k_par();
  const auto s = nondegenerate_match(omega0_1um, 1.5, phi, d);
  CHECK(s.omega1 < 0.5 * omega0_1um);
  CHECK(s.omega2 > 0.5 * omega0_1um);
  CHECK(s.regime == Regime::nondegenerate);

  // independent residual
  const double g = d(s.omega1).k.real() + d(s.omega2).k.real() - k_par;
  CHECK(std::abs(g) <= 1e-9 * k_par);
  // swapping the pair is also a solution
  CHECK(std::abs(d(s.omega2).k.real() + d(s.omega1).k.real() - k_par) <= 1e-9 * k_par);

  // Scan omega1 downward from omega0/2 and locate the first sign change.
  const double lo = std::max(1e-3 * omega0_1um, omega0_1um - d.omega_max);
  const int n = 20000;
  double prev_w = 0.5 * omega0_1um;
  double prev_g = d(prev_w).k.real() * 2.0 - k_par;
  double root = 0.0;
  for (int i = 1; i <= n; ++i) {
    const double w = 0.5 * omega0_1um - (0.5 * omega0_1um - lo) * i / n;
    const double gw = d(w).k.real() + d(omega0_1um - w).k.real() - k_par;
    if ((gw < 0.0) != (prev_g < 0.0)) {
      root = w + (prev_w - w) * (0.0 - gw) / (prev_g - gw);
      break;
    }
    prev_w = w;
    prev_g = gw;
  }
  REQUIRE(root > 0.0);
  CHECK(std::abs(s.omega1 - root) < (0.5 * omega0_1um - lo) / n);
  CHECK(s.omega1 / omega0_1um == approx(0.38591178).epsilon(1e-7));
}

TEST_CASE("one degree below phi0 is out of reach of the silver table") {
  const auto d = air_silver();
  const double phi = degenerate_match(omega0_1um, 1.5, d).phi0 - 1.0 * deg;
  CHECK_THROWS_AS(nondegenerate_match(omega0_1um, 1.5, phi, d), PhysicsError);
}

TEST_CASE("pairs approach degeneracy as phi approaches phi0") {
  const auto d = air_silver();
  const double phi0 = degenerate_match(omega0_1um, 1.5, d).phi0;
  double prev = spp::infinity;
  for (double detune : {0.1, 0.05, 0.02, 0.01, 0.003, 0.001}) {
    const double gap = 0.5 * omega0_1um - nondegenerate_match(omega0_1um, 1.5, phi0 - detune * deg, d).omega1;
    CHECK(gap > 0.0);
    CHECK(gap < prev);
    prev = gap;
  }
}

TEST_CASE("grating period from the momentum deficit") {
  const double n_sp = 1.2;
  const double k_spp = n_sp * omega0_1um / constants::c0;
  const double deficit = 2.0 * constants::pi * 1e6;
  const auto d = constant_index(n_sp);
  CHECK(design_grating_period(omega0_1um, k_spp - deficit, d, 1).period() == approx(1.0e-6).epsilon(1e-12));
  CHECK(design_grating_period(omega0_1um, k_spp - deficit, d, 2).period() == approx(2.0e-6).epsilon(1e-12));
  CHECK_THROWS_AS(design_grating_period(omega0_1um, k_spp, d, 1), PhysicsError);
  CHECK_THROWS_AS(design_grating_period(omega0_1um, k_spp + 1.0, d, 1), PhysicsError);
  CHECK_THROWS_AS(design_grating_period(omega0_1um, k_spp - deficit, d, 0), ValidationError);
}

TEST_CASE("air-silver grating round trip") {
  const auto d = air_silver();
  const auto m = degenerate_match(omega0_1um, 1.5, d);
  const double k_par = PumpGeometry{omega0_1um, 1.5, m.phi0}.k_par();
  for (int order : {1, 2, 3}) {
    const auto g = design_grating_period(omega0_1um, k_par, d, order);
    CHECK(grating_round_trip_residual(omega0_1um, k_par, d, g) < 1e-12);
    CHECK(g.period() == approx(order * 11.0690067e-6).epsilon(1e-7));
  }
}
