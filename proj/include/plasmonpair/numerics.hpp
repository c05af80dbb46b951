#pragma once

#include <cmath>
#include <cstddef>
#include <utility>

#include "plasmonpair/errors.hpp"

namespace plasmonpair::numerics {

struct Extremum {
  double x;
  double value;
};

/// Golden-section search for the maximum of a unimodal function on [a, b].
/// Stops when the bracket is narrower than `tolerance`. The returned point is
/// never worse than either endpoint.
template <class F>
Extremum golden_section_maximize(F&& f, double a, double b, double tolerance, std::size_t max_iter = 500) {
  if (!(a <= b)) throw ValidationError("golden-section search: inverted bracket");
  const double fa = f(a);
  if (a == b) return {a, fa};
  const double fb = f(b);
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double lo = a, hi = b;
  double x1 = hi - inv_phi * (hi - lo);
  double x2 = lo + inv_phi * (hi - lo);
  double f1 = f(x1), f2 = f(x2);
  for (std::size_t i = 0; i < max_iter && (hi - lo) > tolerance; ++i) {
    if (f1 < f2) {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + inv_phi * (hi - lo);
      f2 = f(x2);
    } else {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - inv_phi * (hi - lo);
      f1 = f(x1);
    }
  }
  Extremum best = f1 >= f2 ? Extremum{x1, f1} : Extremum{x2, f2};
  if (fa > best.value) best = {a, fa};
  if (fb > best.value) best = {b, fb};
  return best;
}

template <class F>
Extremum golden_section_minimize(F&& f, double a, double b, double tolerance, std::size_t max_iter = 500) {
  auto r = golden_section_maximize([&](double x) { return -f(x); }, a, b, tolerance, max_iter);
  return {r.x, -r.value};
}

/// Bisection for a sign change of f on [a, b]. Requires f(a) and f(b) of
/// opposite sign (or one of them zero). Terminates when the bracket is below
/// `x_tolerance`.
template <class F>
double bisect(F&& f, double a, double b, double x_tolerance, std::size_t max_iter = 400) {
  double fa = f(a);
  const double fb = f(b);
  if (fa == 0.0) return a;
  if (fb == 0.0) return b;
  if ((fa < 0.0) == (fb < 0.0)) throw NumericalError("bisection: no sign change in bracket");
  for (std::size_t i = 0; i < max_iter && std::abs(b - a) > x_tolerance; ++i) {
    const double m = 0.5 * (a + b);
    const double fm = f(m);
    if (fm == 0.0) return m;
    if ((fm < 0.0) == (fa < 0.0)) {
      a = m;
      fa = fm;
    } else {
      b = m;
    }
  }
  return 0.5 * (a + b);
}

}  // namespace plasmonpair::numerics
