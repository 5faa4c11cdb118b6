#pragma once

#include <array>
#include <cstddef>
#include <string_view>
#include <vector>

namespace densbench::num {

/// Regular (t, x, y, z) sampling box. Index order is t slowest, z fastest.
struct Lattice4 {
  std::array<std::size_t, 4> shape{1, 1, 1, 1};
  std::array<double, 4> origin{0.0, 0.0, 0.0, 0.0};
  std::array<double, 4> spacing{1.0, 1.0, 1.0, 1.0};

  std::size_t size() const { return shape[0] * shape[1] * shape[2] * shape[3]; }
  std::size_t index(std::array<std::size_t, 4> at) const {
    return ((at[0] * shape[1] + at[1]) * shape[2] + at[2]) * shape[3] + at[3];
  }
  std::array<std::size_t, 4> unravel(std::size_t idx) const;
  std::array<double, 4> coord(std::size_t idx) const;
  std::size_t stride(int axis) const;

  /// Sub-lattice with one point trimmed from both ends of every axis in `axes`.
  Lattice4 interior(std::array<bool, 4> axes) const;

  /// Equal-spacing cube: `n` points per spatial axis, `nt` time slices.
  static Lattice4 cube(std::size_t nt, std::size_t n, double h, double dt, std::array<double, 4> origin = {});
};

enum class Provenance { Dirac, KleinGordon, Other };
std::string_view to_string(Provenance p);

/// Sampled (rho, j^1, j^2, j^3) on a lattice.
struct FourCurrent {
  Lattice4 lattice;
  std::vector<double> rho;
  std::array<std::vector<double>, 3> j;
  Provenance provenance = Provenance::Other;
};

/// max |d_t rho + div j| over points interior in all four directions,
/// second-order central differences. Every axis needs at least 3 points.
double divergence_residual(const FourCurrent& current);

}  // namespace densbench::num
