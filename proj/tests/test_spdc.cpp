#include <doctest.h>

#include "approx.hpp"

#include <cmath>
#include <functional>
#include <random>

#include "plasmonpair/constants.hpp"
#include "plasmonpair/errors.hpp"
#include "plasmonpair/spdc.hpp"
#include "plasmonpair/units.hpp"

using namespace plasmonpair;
using namespace plasmonpair::spdc;
namespace u = plasmonpair::units;

namespace {

double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }

// Unit-tagged restatement of the two formulas, checked at compile time.
u::Dimensionless F_tagged(u::PerSecond w1, u::PerSecond w2, u::MetrePerVolt chi, u::VoltPerMetre E0, u::Metre l) {
  const u::MetrePerSecond c{constants::c0};
  const auto F = 4.0 * constants::pi * constants::pi * (w1 * w2 / u::square(c)) * u::square(chi * E0 * l);
  static_assert(u::is_dimensionless_v<decltype(F)>);
  return F;
}

u::Dimensionless kappa_tagged(double alpha, double gain, u::PerSecond w0, u::Metre l, u::MetrePerVolt chi) {
  const u::JouleSecond hbar{constants::hbar};
  const u::Ohm Z0{constants::Z0};
  const u::Metre lambda{4.0 * constants::pi * constants::c0 / w0.value};
  const auto numerator = hbar * u::square(w0) * Z0 * u::square(l) * u::square(chi);
  const auto k = (alpha * gain) * (numerator / u::square(u::square(lambda)));
  static_assert(u::is_dimensionless_v<decltype(k)>);
  return k;
}

SpdcScenario ordinary_baseline() {
  auto s = SpdcScenario::degenerate(1e-6, 1.0, 1.0);
  s.l_delta = 1e-3;
  s.alpha = 1e-2;
  return s;
}

}  // namespace

TEST_CASE("effective nonlinearity") {
  CHECK(effective_chi2(1e-12, 1, 1, 1) == 1e-12);
  CHECK(effective_chi2(1e-12, 1, 35, 35) == approx(1225e-12).epsilon(1e-15));
  CHECK(effective_chi2(0.0, 3, 35, 35) == 0.0);
  CHECK_THROWS_AS(effective_chi2(1e-12, -1, 1, 1), ValidationError);
}

TEST_CASE("transformation coefficient") {
  CHECK(transformation_coefficient(1.88e15, 1.88e15, 0.0, 1e6, 1e-3) == 0.0);
  const double F = transformation_coefficient(1.88e15, 1.88e15, 1e-12, 1e6, 1e-3);
  CHECK(rel(F, 1.5525086528786524e-3) < 1e-12);
  CHECK(rel(F, F_tagged({1.88e15}, {1.88e15}, {1e-12}, {1e6}, {1e-3}).value) < 1e-14);
}

TEST_CASE("signal radiance") {
  CHECK(signal_radiance(0.25, 0.0) == 0.25);
  CHECK(signal_radiance(0.25, 1.0) == 0.5);
  CHECK(signal_radiance(0.0, 7.0) == 0.0);
  CHECK_THROWS_AS(signal_radiance(-1.0, 0.0), ValidationError);
}

TEST_CASE("pump bookkeeping helpers") {
  CHECK(pump_field_from_intensity(1e4) == approx(std::sqrt(constants::Z0 * 1e4)));
  const double w0 = 2.0 * constants::angular_frequency(1e-6);
  CHECK(pump_power_from_photon_number(3.0, w0) == approx(3.0 * constants::hbar * w0 * w0));
}

TEST_CASE("literal yield of the baseline configuration") {
  const auto r = yield_kappa(ordinary_baseline());
  CHECK(rel(r.kappa, 5.638101823429475e-09) < 1e-12);
  CHECK(r.kappa == r.kappa_baseline);
  CHECK(r.enhancement_gain == 1.0);
  const double w0 = 2.0 * constants::angular_frequency(1e-6);
  CHECK(rel(r.kappa, kappa_tagged(1e-2, 1.0, {w0}, {1e-3}, {1e-12}).value) < 1e-14);
  CHECK_FALSE(r.F.has_value());
}

TEST_CASE("plasmonic enhancement ratio") {
  auto s = ordinary_baseline();
  const double base = yield_kappa(s).kappa;
  s.eta1 = s.eta2 = 35.0;
  s.l_delta = 3e-3;
  const auto r = yield_kappa(s);
  CHECK(rel(r.kappa / base, 13505625.0) < 1e-9);
  CHECK(rel(r.enhancement_gain, std::pow(35.0, 4)) < 1e-15);
  CHECK(rel(r.kappa / r.kappa_baseline, r.enhancement_gain) < 1e-15);
}

TEST_CASE("exact scaling laws under random perturbations") {
  std::mt19937_64 rng(20260419);
  std::uniform_real_distribution<double> factor(0.2, 5.0);

  auto s0 = ordinary_baseline();
  s0.eta0 = 1.3;
  s0.eta1 = s0.eta2 = 21.0;
  s0.pump_field_E0 = 2e6;

  auto kappa = [](const SpdcScenario& s) { return yield_kappa(s).kappa; };
  auto F = [](const SpdcScenario& s) { return *yield_kappa(s).F; };

  struct Knob {
    const char* name;
    std::function<void(SpdcScenario&, double)> scale;
    double kappa_power;
    double F_power;
  };
  const std::vector<Knob> knobs{
      {"E0", [](SpdcScenario& s, double f) { s.pump_field_E0 = *s.pump_field_E0 * f; }, 0.0, 2.0},
      {"chi2", [](SpdcScenario& s, double f) { s.chi2.chi2_magnitude *= f; }, 2.0, 2.0},
      {"l_delta", [](SpdcScenario& s, double f) { s.l_delta *= f; }, 2.0, 2.0},
      {"eta1", [](SpdcScenario& s, double f) { s.eta1 *= f, s.eta2 *= f; }, 4.0, 4.0},
      {"eta0", [](SpdcScenario& s, double f) { s.eta0 *= f; }, 2.0, 2.0},
      {"alpha", [](SpdcScenario& s, double f) { s.alpha *= f; }, 1.0, 0.0},
      {"loss", [](SpdcScenario& s, double f) { s.loss_factor = f / 5.0; }, 1.0, 0.0},
  };
  for (const auto& knob : knobs) {
    for (int trial = 0; trial < 50; ++trial) {
      const double f = factor(rng);
      auto s = s0;
      knob.scale(s, f);
      INFO(knob.name << " x" << f);
      const double applied = knob.name == std::string("loss") ? s.loss_factor / s0.loss_factor : f;
      CHECK(rel(kappa(s) / kappa(s0), std::pow(applied, knob.kappa_power)) < 1e-12);
      CHECK(rel(F(s) / F(s0), std::pow(applied, knob.F_power)) < 1e-12);
    }
  }
}

TEST_CASE("wavelength and frequency descriptions agree") {
  auto a = SpdcScenario::degenerate(0.8e-6, 1.0, 10.0);
  SpdcScenario b = a;
  b.omega0 = 4.0 * constants::pi * constants::c0 / 0.8e-6;
  CHECK(a.lambda_pair() == approx(0.8e-6).epsilon(1e-15));
  CHECK(rel(yield_kappa(a).kappa, yield_kappa(b).kappa) < 1e-13);
}

TEST_CASE("radiance with a pump field") {
  auto s = ordinary_baseline();
  s.pump_field_E0 = 1e6;
  s.N2 = 1.0;
  const auto r = yield_kappa(s);
  REQUIRE(r.F.has_value());
  CHECK(*r.N1 == approx(2.0 * *r.F));
  CHECK(*r.F >= 0.0);
}

TEST_CASE("invalid scenarios") {
  auto s = ordinary_baseline();
  s.alpha = -0.1;
  CHECK_THROWS_AS(yield_kappa(s), ValidationError);
  s = ordinary_baseline();
  s.l_delta = -1.0;
  CHECK_THROWS_AS(yield_kappa(s), ValidationError);
  s = ordinary_baseline();
  s.omega1 = 3.0 * s.omega0;
  CHECK_THROWS_AS(yield_kappa(s), ValidationError);
}
