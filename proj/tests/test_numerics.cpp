#include <doctest.h>

#include "approx.hpp"

#include <cmath>

#include "plasmonpair/numerics.hpp"

using namespace plasmonpair;
using namespace plasmonpair::numerics;

TEST_CASE("golden section finds an interior peak") {
  const auto r = golden_section_maximize([](double x) { return -(x - 0.3) * (x - 0.3); }, 0.0, 1.0, 1e-10);
  CHECK(r.x == approx(0.3).epsilon(1e-8));
  const auto m = golden_section_minimize([](double x) { return std::cosh(x - 2.0); }, -5.0, 5.0, 1e-10);
  CHECK(m.x == approx(2.0).epsilon(1e-8));
  CHECK(m.value == approx(1.0));
}

TEST_CASE("golden section on a degenerate or monotone bracket") {
  const auto r = golden_section_maximize([](double x) { return x; }, 2.0, 2.0, 1e-9);
  CHECK(r.x == 2.0);
  const auto e = golden_section_maximize([](double x) { return x; }, 0.0, 1.0, 1e-6);
  CHECK(e.x == 1.0);
  CHECK_THROWS_AS(golden_section_maximize([](double x) { return x; }, 1.0, 0.0, 1e-6), ValidationError);
}

TEST_CASE("bisection") {
  CHECK(bisect([](double x) { return x * x - 2.0; }, 0.0, 2.0, 1e-14) == approx(std::sqrt(2.0)).epsilon(1e-13));
  CHECK(bisect([](double x) { return x; }, 0.0, 1.0, 1e-9) == 0.0);
  CHECK_THROWS_AS(bisect([](double x) { return x * x + 1.0; }, -1.0, 1.0, 1e-9), NumericalError);
}
