#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace densbench::num {

using cplx = std::complex<double>;

struct Rule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// n-point Gauss-Legendre rule on [-1, 1], nodes ascending. Exact for
/// polynomials of degree <= 2n - 1.
Rule gauss_legendre(int n);

/// Composite Gauss-Legendre on [a, b]: `panels` equal panels of `order` points each.
Rule composite_gauss_legendre(double a, double b, int panels, int order);

struct GridSpec {
  int radial_panels = 16;
  int radial_order = 8;
  int polar_order = 32;
  int azimuthal_count = 8;

  /// Doubles every resolution parameter except the per-panel order.
  GridSpec refined() const;
  friend bool operator==(const GridSpec&, const GridSpec&) = default;
};

/// Tensor-product quadrature over the ball r <= R with measure
/// r^2 sin(theta) dr dtheta dphi. Radial: composite Gauss-Legendre;
/// polar: Gauss-Legendre in cos(theta); azimuth: uniform trapezoid.
class BallGrid {
 public:
  struct Point {
    double r;
    double cos_theta;
    double theta;
    double phi;
    double weight;
  };

  BallGrid(double radius, GridSpec spec = {});

  double radius() const { return radius_; }
  const GridSpec& spec() const { return spec_; }
  std::size_t size() const { return radial_.nodes.size() * polar_.nodes.size() * azimuth_.size(); }

  const Rule& radial() const { return radial_; }  // weights include r^2
  const Rule& polar() const { return polar_; }    // nodes are cos(theta)
  std::span<const double> azimuth() const { return azimuth_; }
  double azimuth_weight() const { return azimuth_weight_; }

  /// Flat index (radial, polar, azimuthal), azimuth fastest.
  Point point(std::size_t index) const;

  template <class F>
  std::vector<cplx> sample(F&& f) const {
    std::vector<cplx> out(size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = f(point(i));
    return out;
  }

  friend bool operator==(const BallGrid& a, const BallGrid& b) {
    return a.radius_ == b.radius_ && a.spec_ == b.spec_;
  }

 private:
  double radius_;
  GridSpec spec_;
  Rule radial_;
  Rule polar_;
  std::vector<double> azimuth_;
  double azimuth_weight_;
};

/// Weighted sum of samples taken at `grid.point(i)`.
cplx integrate_ball(std::span<const cplx> samples, const BallGrid& grid);

}  // namespace densbench::num
