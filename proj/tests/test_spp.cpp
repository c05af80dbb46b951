#include <doctest.h>

#include "approx.hpp"

#include <cmath>

#include "plasmonpair/constants.hpp"
#include "plasmonpair/materials.hpp"
#include "plasmonpair/spp.hpp"

using namespace plasmonpair;
using namespace plasmonpair::spp;

namespace {

constexpr double deg = constants::pi / 180.0;

SppMode mode_with_imag_k(double im_k) {
  SppMode m{};
  m.k = {1e7, im_k};
  return m;
}

SppMode air_silver(double lambda) {
  return spp_mode(materials::permittivity(materials::silver(), lambda), 1.0, lambda);
}

}  // namespace

TEST_CASE("lossless Drude-like toy metal") {
  const auto m = spp_mode({-2.0, 0.0}, 1.0, 1e-6);
  CHECK(m.n_sp.real() == approx(std::sqrt(2.0)).epsilon(1e-15));
  CHECK(m.k.imag() == 0.0);
  CHECK(m.L_prop == infinity);
  CHECK(m.bound);
  CHECK(m.omega == approx(constants::angular_frequency(1e-6)));
  CHECK(m.k.real() == approx(2.0 * constants::pi / 1e-6 * std::sqrt(2.0)));
}

TEST_CASE("perfect conductor limit") {
  CHECK(std::abs(spp_mode({-1e9, 0.0}, 1.0, 1e-6).n_sp - 1.0) < 1e-4);
  CHECK(std::abs(spp_mode({-1e9, 1.0}, 2.25, 1e-6).n_sp - 1.5) < 1e-4);
}

TEST_CASE("pole and unbound configurations") {
  CHECK_THROWS_AS(spp_mode({-1.0, 0.0}, 1.0, 1e-6), PhysicsError);
  const auto m = spp_mode({-0.5, 0.0}, 1.0, 1e-6);
  CHECK_FALSE(m.bound);
  CHECK(m.n_sp.real() >= 0.0);
}

TEST_CASE("air-silver mode at one micron") {
  const auto m = air_silver(1e-6);
  CHECK(m.bound);
  CHECK(m.n_sp.real() == approx(1.0099921).epsilon(1e-7));
  CHECK(m.n_sp.imag() == approx(1.1386e-4).epsilon(1e-3));
  CHECK(m.n_sp.imag() > 1e-4);
  CHECK(m.n_sp.imag() < 1e-3);
  CHECK(m.L_prop == approx(1.0 / (2.0 * m.k.imag())));
}

TEST_CASE("air-silver dispersion over the near infrared") {
  double prev = 2.0;
  for (double l = 0.7e-6; l <= 1.6e-6 + 1e-15; l += 0.01e-6) {
    const auto m = air_silver(l);
    CHECK(m.n_sp.real() < prev);
    CHECK(m.n_sp.real() > 1.0);
    CHECK(m.n_sp.real() < 1.1);
    prev = m.n_sp.real();
  }
  // The tabulated extinction steps non-smoothly near 1.1 um, so the loss is
  // only checked for its overall trend.
  CHECK(air_silver(0.7e-6).n_sp.imag() > air_silver(1.0e-6).n_sp.imag());
  CHECK(air_silver(1.0e-6).n_sp.imag() > air_silver(1.6e-6).n_sp.imag());
}

TEST_CASE("damping-limited coherence length") {
  CHECK(coherence_length_damping(mode_with_imag_k(500.0)) == approx(1e-3).epsilon(1e-15));
  CHECK(coherence_length_damping(mode_with_imag_k(0.0)) == infinity);
  const double l = coherence_length_damping(mode_with_imag_k(166.7));
  CHECK(l == approx(3.0e-3).epsilon(1e-3));
  // "1.67 per cm" read as 1/(6 mm): exactly three millimetres.
  CHECK(std::abs(coherence_length_damping(mode_with_imag_k(1.0 / 6e-3)) - 3e-3) / 3e-3 < 1e-12);
  CHECK(coherence_length_damping(mode_with_imag_k(100.0)) == approx(5e-3));
  CHECK(coherence_length_damping(mode_with_imag_k(200.0)) == approx(2.5e-3));
}

TEST_CASE("mismatch-limited coherence length") {
  CHECK(coherence_length_mismatch(1e7, 4.95e6, 4.95e6) == approx(1e-5).epsilon(1e-12));
  CHECK(coherence_length_mismatch(1e7, 4e6, 6e6) == infinity);
  const auto m = air_silver(1e-6);
  const complex k0 = 2.0 * m.k.real();
  CHECK(coherence_length_mismatch(k0, m.k, m.k) == approx(coherence_length_damping(m)).epsilon(1e-12));
}

TEST_CASE("prism coupling angle") {
  const auto grazing = kretschmann_angle(1.5, 1.5);
  CHECK(grazing.phi_from_plane == 0.0);
  CHECK(grazing.theta_from_normal == approx(constants::pi / 2));
  const auto a = kretschmann_angle(1.011, 1.5);
  CHECK(a.phi_from_plane / deg == approx(47.6).epsilon(1e-3));
  CHECK(a.theta_from_normal / deg == approx(42.4).epsilon(1e-3));
  CHECK(a.phi_from_plane + a.theta_from_normal == constants::pi / 2);
  CHECK_THROWS_AS(kretschmann_angle(1.2, 1.0), PhysicsError);
  CHECK_THROWS_AS(kretschmann_angle(0.0, 1.0), ValidationError);
}

TEST_CASE("grating folding") {
  const GratingSpec g(2.0 * constants::pi / 3.0);
  CHECK(g.k_a() == approx(3.0).epsilon(1e-15));
  const auto f = fold_wavevector(10.0, g, 2);
  REQUIRE(f.size() == 5);
  const int orders[] = {-2, -1, 0, 1, 2};
  const double ks[] = {16.0, 13.0, 10.0, 7.0, 4.0};
  for (std::size_t i = 0; i < 5; ++i) {
    CHECK(f[i].order == orders[i]);
    CHECK(f[i].k == approx(ks[i]).epsilon(1e-14));
  }
  CHECK_THROWS_AS(GratingSpec{0.0}, ValidationError);
  CHECK_THROWS_AS(GratingSpec{infinity}, ValidationError);
  CHECK_THROWS_AS(fold_wavevector(10.0, g, 0), ValidationError);
}

TEST_CASE("interface dispersion respects the table") {
  const auto d = interface_dispersion(materials::silver(), materials::vacuum());
  const double w = constants::angular_frequency(1e-6);
  CHECK(d(w).n_sp == air_silver(1e-6).n_sp);
  CHECK(d.omega_min > constants::angular_frequency(1.937e-6));
  CHECK(d.omega_max < constants::angular_frequency(0.1879e-6));
  CHECK_NOTHROW(d(d.omega_min));
  CHECK_NOTHROW(d(d.omega_max));
  const auto toy = interface_dispersion(materials::Material::constant_index(0.5), materials::vacuum());
  CHECK(toy.omega_max == infinity);
}
