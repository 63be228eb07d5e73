// Small numeric helpers used everywhere: complex alias, roots of unity,
// default tolerances.
#pragma once

#include <cmath>
#include <complex>
#include <numbers>

namespace braidmono {

using complexd = std::complex<double>;

inline constexpr double kPi = std::numbers::pi;

// Default absolute tolerance for clustering coincidence parameters.
inline constexpr double kClusterTol = 1e-9;
// Tolerance for deciding that two puncture values are confluent.
inline constexpr double kConfluenceTol = 1e-12;
// Endpoint matching radius for closed-path permutations.
inline constexpr double kMatchTol = 1e-9;

// e(x) = exp(2 pi i x).
inline complexd unit_root(double x) {
  return std::polar(1.0, 2.0 * kPi * x);
}

// omega_m^j = e(j/m).
inline complexd omega(int m, int j) {
  return unit_root(static_cast<double>(j) / static_cast<double>(m));
}

inline double sq_abs(complexd z) {
  return z.real() * z.real() + z.imag() * z.imag();
}

// Distance from point p to the segment [a, b].
inline double point_segment_distance(complexd p, complexd a, complexd b) {
  const complexd ab = b - a;
  const double len2 = sq_abs(ab);
  if (len2 == 0.0) return std::abs(p - a);
  double t = ((p.real() - a.real()) * ab.real() + (p.imag() - a.imag()) * ab.imag()) / len2;
  t = std::clamp(t, 0.0, 1.0);
  return std::abs(p - (a + t * ab));
}

}  // namespace braidmono
