#pragma once

// Minimal compile-time dimensional analysis over the SI base dimensions
// mass, length, time and current. Only what the yield formulas need.

namespace plasmonpair::units {

template <int M, int L, int T, int I>
struct Quantity {
  double value{};

  static constexpr int mass = M;
  static constexpr int length = L;
  static constexpr int time = T;
  static constexpr int current = I;

  constexpr Quantity operator+(Quantity o) const { return {value + o.value}; }
  constexpr Quantity operator-(Quantity o) const { return {value - o.value}; }
  constexpr Quantity operator*(double s) const { return {value * s}; }
};

template <int M1, int L1, int T1, int I1, int M2, int L2, int T2, int I2>
constexpr Quantity<M1 + M2, L1 + L2, T1 + T2, I1 + I2> operator*(Quantity<M1, L1, T1, I1> a,
                                                                 Quantity<M2, L2, T2, I2> b) {
  return {a.value * b.value};
}

template <int M1, int L1, int T1, int I1, int M2, int L2, int T2, int I2>
constexpr Quantity<M1 - M2, L1 - L2, T1 - T2, I1 - I2> operator/(Quantity<M1, L1, T1, I1> a,
                                                                 Quantity<M2, L2, T2, I2> b) {
  return {a.value / b.value};
}

template <int M, int L, int T, int I>
constexpr Quantity<M, L, T, I> operator*(double s, Quantity<M, L, T, I> q) {
  return {s * q.value};
}

template <int M, int L, int T, int I>
constexpr Quantity<2 * M, 2 * L, 2 * T, 2 * I> square(Quantity<M, L, T, I> q) {
  return {q.value * q.value};
}

template <class Q>
inline constexpr bool is_dimensionless_v = Q::mass == 0 && Q::length == 0 && Q::time == 0 && Q::current == 0;

template <class A, class B>
inline constexpr bool same_dimension_v =
    A::mass == B::mass && A::length == B::length && A::time == B::time && A::current == B::current;

using Dimensionless = Quantity<0, 0, 0, 0>;
using Metre = Quantity<0, 1, 0, 0>;
using Second = Quantity<0, 0, 1, 0>;
using PerSecond = Quantity<0, 0, -1, 0>;  // angular frequency, rad/s
using MetrePerSecond = Quantity<0, 1, -1, 0>;
using Joule = Quantity<1, 2, -2, 0>;
using JouleSecond = Quantity<1, 2, -1, 0>;
using Watt = Quantity<1, 2, -3, 0>;
using Volt = Quantity<1, 2, -3, -1>;
using Ohm = Quantity<1, 2, -3, -2>;
using VoltPerMetre = Quantity<1, 1, -3, -1>;
using MetrePerVolt = Quantity<-1, -1, 3, 1>;

}  // namespace plasmonpair::units
