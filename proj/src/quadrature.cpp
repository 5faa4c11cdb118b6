#include "densbench/quadrature.hpp"

#include <cmath>
#include <numbers>

#include "densbench/error.hpp"

namespace densbench::num {

Rule gauss_legendre(int n) {
  if (n < 1) throw Error(ErrorKind::InvalidOrder, "Gauss-Legendre order must be >= 1");
  Rule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  const int half = (n + 1) / 2;
  for (int i = 0; i < half; ++i) {
    // Tricomi initial guess, then Newton on P_n.
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0;
      double p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    // Recompute derivative at the converged node.
    double p0 = 1.0;
    double p1 = x;
    for (int k = 2; k <= n; ++k) {
      const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
      p0 = p1;
      p1 = p2;
    }
    dp = n * (x * p1 - p0) / (x * x - 1.0);
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    rule.nodes[i] = -x;
    rule.nodes[n - 1 - i] = x;
    rule.weights[i] = w;
    rule.weights[n - 1 - i] = w;
  }
  if (n % 2 == 1) rule.nodes[n / 2] = 0.0;
  return rule;
}

Rule composite_gauss_legendre(double a, double b, int panels, int order) {
  if (panels < 1) throw Error(ErrorKind::InvalidArgument, "need at least one panel");
  if (!(b > a)) throw Error(ErrorKind::InvalidArgument, "empty interval");
  const Rule base = gauss_legendre(order);
  const double h = (b - a) / panels;
  Rule out;
  out.nodes.reserve(static_cast<std::size_t>(panels) * order);
  out.weights.reserve(out.nodes.capacity());
  for (int p = 0; p < panels; ++p) {
    const double mid = a + (p + 0.5) * h;
    for (int i = 0; i < order; ++i) {
      out.nodes.push_back(mid + 0.5 * h * base.nodes[i]);
      out.weights.push_back(0.5 * h * base.weights[i]);
    }
  }
  return out;
}

GridSpec GridSpec::refined() const {
  return {radial_panels * 2, radial_order, polar_order * 2, azimuthal_count * 2};
}

BallGrid::BallGrid(double radius, GridSpec spec) : radius_(radius), spec_(spec) {
  if (!(radius > 0.0)) throw Error(ErrorKind::InvalidArgument, "ball radius must be positive");
  if (spec.azimuthal_count < 1) throw Error(ErrorKind::InvalidArgument, "azimuthal count must be >= 1");
  radial_ = composite_gauss_legendre(0.0, radius, spec.radial_panels, spec.radial_order);
  for (std::size_t i = 0; i < radial_.nodes.size(); ++i) {
    radial_.weights[i] *= radial_.nodes[i] * radial_.nodes[i];
  }
  polar_ = gauss_legendre(spec.polar_order);
  azimuth_weight_ = 2.0 * std::numbers::pi / spec.azimuthal_count;
  azimuth_.resize(spec.azimuthal_count);
  for (int k = 0; k < spec.azimuthal_count; ++k) azimuth_[k] = k * azimuth_weight_;
}

BallGrid::Point BallGrid::point(std::size_t index) const {
  const std::size_t n_phi = azimuth_.size();
  const std::size_t n_theta = polar_.nodes.size();
  const std::size_t k = index % n_phi;
  const std::size_t j = (index / n_phi) % n_theta;
  const std::size_t i = index / (n_phi * n_theta);
  const double x = polar_.nodes[j];
  return {radial_.nodes.at(i), x, std::acos(x), azimuth_[k],
          radial_.weights[i] * polar_.weights[j] * azimuth_weight_};
}

cplx integrate_ball(std::span<const cplx> samples, const BallGrid& grid) {
  if (samples.size() != grid.size()) {
    throw Error(ErrorKind::InvalidArgument, "sample count does not match the grid");
  }
  const std::size_t n_phi = grid.azimuth().size();
  const std::size_t n_theta = grid.polar().nodes.size();
  cplx total{};
  std::size_t idx = 0;
  for (std::size_t i = 0; i < grid.radial().nodes.size(); ++i) {
    cplx shell{};
    for (std::size_t j = 0; j < n_theta; ++j) {
      cplx ring{};
      for (std::size_t k = 0; k < n_phi; ++k) ring += samples[idx++];
      shell += grid.polar().weights[j] * ring;
    }
    total += grid.radial().weights[i] * shell;
  }
  return total * grid.azimuth_weight();
}

}  // namespace densbench::num
