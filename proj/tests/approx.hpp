#pragma once

#include <doctest.h>

// doctest::Approx adds an absolute slack of epsilon * 1.0, which swallows
// SI-sized quantities like 1e-6 m. This one is purely relative.
inline doctest::Approx approx(double value) { return doctest::Approx(value).scale(0.0); }
