#pragma once

// Fixtures shared by the unit and acceptance suites.

#include <cmath>
#include <vector>

#include "densbench/fieldops.hpp"

namespace densbench::testing {

inline field::SpinorField dirac_superposition(const num::Lattice4& lat, double mass) {
  const auto a = field::SpinorPlaneWave::make({0.7, -0.3, 0.4}, mass, 1);
  const auto b = field::SpinorPlaneWave::make({-0.5, 0.9, 0.2}, mass, 2);
  const auto c = field::SpinorPlaneWave::make({0.1, 0.2, -1.1}, mass, 1);
  return field::sample_spinor_field(lat, [&](const std::array<double, 4>& x) {
    return field::Spinor(a.at(x) + 0.6 * b.at(x) + field::cplx(0.2, 0.5) * c.at(x));
  });
}

inline field::KGField kg_superposition(const num::Lattice4& lat, double mass) {
  const auto a = field::KGPlaneWave::make({1.0, 0.0}, {0.8, -0.2, 0.5}, mass);
  const auto b = field::KGPlaneWave::make({0.3, 0.4}, {-0.6, 1.1, 0.0}, mass);
  const auto c = field::KGPlaneWave::make({0.5, -0.2}, {0.0, 0.3, -0.9}, mass, +1);
  return field::sample_kg_field(lat, [&](const std::array<double, 4>& x) {
    const auto pa = a.at(x);
    const auto pb = b.at(x);
    const auto pc = c.at(x);
    field::KGPoint p;
    p.phi = pa.phi + pb.phi + pc.phi;
    for (int mu = 0; mu < 4; ++mu) p.dphi[mu] = pa.dphi[mu] + pb.dphi[mu] + pc.dphi[mu];
    return p;
  });
}

/// Lattice over [0, extent]^4 with `n` points per axis.
inline num::Lattice4 box(std::size_t n, double extent) {
  const double h = extent / static_cast<double>(n - 1);
  return num::Lattice4::cube(n, n, h, h);
}

inline double observed_order(double coarse, double fine) { return std::log2(coarse / fine); }

}  // namespace densbench::testing
