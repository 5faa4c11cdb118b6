#pragma once

#include <complex>

namespace densbench::num {

inline constexpr int kMaxHarmonicDegree = 4;

/// Orthonormal spherical harmonic Y_lm(theta, phi) with the Condon-Shortley
/// phase, from closed forms; l <= 4.
std::complex<double> spherical_harmonic(int l, int m, double theta, double phi);

/// Associated Legendre P_l^m(x) with Condon-Shortley phase, 0 <= m <= l <= 4.
double associated_legendre(int l, int m, double x);

}  // namespace densbench::num
