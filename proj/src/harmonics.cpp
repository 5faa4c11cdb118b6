#include "densbench/harmonics.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <numbers>

#include "densbench/error.hpp"

namespace densbench::num {

double associated_legendre(int l, int m, double x) {
  if (l < 0 || l > kMaxHarmonicDegree || m < 0 || m > l) {
    throw Error(ErrorKind::InvalidArgument, "associated Legendre index out of range");
  }
  const double s = std::sqrt(std::max(0.0, 1.0 - x * x));
  const double x2 = x * x;
  switch (10 * l + m) {
    case 0: return 1.0;
    case 10: return x;
    case 11: return -s;
    case 20: return 0.5 * (3.0 * x2 - 1.0);
    case 21: return -3.0 * x * s;
    case 22: return 3.0 * s * s;
    case 30: return 0.5 * (5.0 * x2 - 3.0) * x;
    case 31: return -1.5 * (5.0 * x2 - 1.0) * s;
    case 32: return 15.0 * x * s * s;
    case 33: return -15.0 * s * s * s;
    case 40: return 0.125 * ((35.0 * x2 - 30.0) * x2 + 3.0);
    case 41: return -2.5 * (7.0 * x2 - 3.0) * x * s;
    case 42: return 7.5 * (7.0 * x2 - 1.0) * s * s;
    case 43: return -105.0 * x * s * s * s;
    case 44: return 105.0 * s * s * s * s;
    default: break;
  }
  throw Error(ErrorKind::InvalidArgument, "associated Legendre index out of range");
}

namespace {

double factorial(int n) {
  double f = 1.0;
  for (int k = 2; k <= n; ++k) f *= k;
  return f;
}

}  // namespace

std::complex<double> spherical_harmonic(int l, int m, double theta, double phi) {
  if (l < 0 || l > kMaxHarmonicDegree || std::abs(m) > l) {
    throw Error(ErrorKind::InvalidArgument,
                "spherical harmonic (l=" + std::to_string(l) + ", m=" + std::to_string(m) + ") out of range");
  }
  const int am = std::abs(m);
  const double norm =
      std::sqrt((2.0 * l + 1.0) / (4.0 * std::numbers::pi) * factorial(l - am) / factorial(l + am));
  const std::complex<double> y = norm * associated_legendre(l, am, std::cos(theta)) *
                                 std::polar(1.0, am * phi);
  if (m >= 0) return y;
  // Y_{l,-m} = (-1)^m conj(Y_{lm})
  return (am % 2 == 0 ? 1.0 : -1.0) * std::conj(y);
}

}  // namespace densbench::num
