#include "densbench/well.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "densbench/error.hpp"

namespace densbench::num {

double spherical_bessel_j(int l, double x) {
  if (l < 0 || l > 4) throw Error(ErrorKind::InvalidArgument, "spherical Bessel order out of range");
  const double ax = std::abs(x);
  if (ax < l + 1.0) {
    // Power series: j_l(x) = x^l / (2l+1)!! * (1 - x^2/(2(2l+3)) + x^4/(8(2l+3)(2l+5)) - ...)
    double dfact = 1.0;
    for (int k = 1; k <= 2 * l + 1; k += 2) dfact *= k;
    const double x2 = x * x;
    double term = 1.0;
    double sum = 1.0;
    for (int n = 1; n < 30 && std::abs(term) > 1e-18; ++n) {
      term *= -x2 / (2.0 * n * (2.0 * l + 2.0 * n + 1.0));
      sum += term;
    }
    return std::pow(x, l) / dfact * sum;
  }
  const double s = std::sin(x);
  const double c = std::cos(x);
  double jm = s / x;  // j0
  if (l == 0) return jm;
  double j = s / (x * x) - c / x;  // j1
  for (int n = 1; n < l; ++n) {
    const double next = (2.0 * n + 1.0) / x * j - jm;
    jm = j;
    j = next;
  }
  return j;
}

double bisect(const std::function<double(double)>& f, double lo, double hi, double tolerance) {
  double flo = f(lo);
  const double fhi = f(hi);
  if (flo == 0.0) return lo;
  if (fhi == 0.0) return hi;
  if ((flo > 0.0) == (fhi > 0.0)) throw Error(ErrorKind::InvalidArgument, "root is not bracketed");
  while (hi - lo > tolerance) {
    const double mid = 0.5 * (lo + hi);
    const double fm = f(mid);
    if (fm == 0.0) return mid;
    if ((fm > 0.0) == (flo > 0.0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

double first_bessel_zero(int l) {
  const auto f = [l](double x) { return spherical_bessel_j(l, x); };
  // j_l > 0 on (0, l + 1/2] and has its first zero below l + pi + 1.
  constexpr double step = 0.05;
  double lo = l + 0.5;
  while (f(lo + step) > 0.0) lo += step;
  return bisect(f, lo, lo + step, 1e-13);
}

double RadialMode::operator()(double r) const {
  if (r >= radius) return 0.0;
  return scale * std::max(0.0, spherical_bessel_j(l, k * r));
}

std::vector<double> RadialMode::sample(std::span<const double> r) const {
  std::vector<double> out(r.size());
  std::transform(r.begin(), r.end(), out.begin(), [this](double x) { return (*this)(x); });
  return out;
}

int count_interior_nodes(const RadialMode& mode, int samples) {
  int nodes = 0;
  double prev = spherical_bessel_j(mode.l, mode.k * mode.radius / (samples + 1));
  for (int i = 2; i <= samples; ++i) {
    const double cur = spherical_bessel_j(mode.l, mode.k * mode.radius * i / (samples + 1));
    if ((cur > 0.0) != (prev > 0.0)) ++nodes;
    prev = cur;
  }
  return nodes;
}

RadialMode solve_well_mode(int l, double radius, double mass) {
  if (l < 0 || l > 1) {
    throw Error(ErrorKind::UnsupportedStructure, "well modes are provided for l = 0, 1 only, got l=" + std::to_string(l));
  }
  if (!(radius > 0.0)) throw Error(ErrorKind::InvalidArgument, "well radius must be positive");
  if (!(mass >= 0.0)) throw Error(ErrorKind::InvalidArgument, "mass must be nonnegative");
  RadialMode mode;
  mode.l = l;
  mode.radius = radius;
  mode.mass = mass;
  mode.k = first_bessel_zero(l) / radius;
  mode.omega = std::sqrt(mode.k * mode.k + mass * mass);
  mode.node_count = count_interior_nodes(mode);
  return mode;
}

}  // namespace densbench::num
