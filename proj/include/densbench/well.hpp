#pragma once

#include <functional>
#include <span>
#include <vector>

namespace densbench::num {

/// Spherical Bessel function of the first kind, j_l(x), 0 <= l <= 4.
double spherical_bessel_j(int l, double x);

/// Root of `f` in [lo, hi] by bisection. `f(lo)` and `f(hi)` must differ in sign.
double bisect(const std::function<double(double)>& f, double lo, double hi, double tolerance = 1e-12);

/// First positive zero of j_l, bracketed by a forward scan and refined by bisection.
double first_bessel_zero(int l);

/// Lowest KG mode of angular momentum l in an infinite spherical well of
/// radius R: f(r) = j_l(k r) with k R the first zero of j_l and
/// omega^2 = k^2 + m^2. f is unnormalized, nonnegative, zero for r >= R.
struct RadialMode {
  int l = 0;
  double radius = 1.0;
  double mass = 0.0;
  double k = 0.0;
  double omega = 0.0;
  int node_count = 0;
  double scale = 1.0;

  double operator()(double r) const;
  std::vector<double> sample(std::span<const double> r) const;
};

RadialMode solve_well_mode(int l, double radius, double mass);

/// Sign changes of f on `samples` equispaced interior points.
int count_interior_nodes(const RadialMode& mode, int samples = 4000);

}  // namespace densbench::num
