#include "densbench/lattice.hpp"

#include <algorithm>
#include <cmath>

#include "densbench/error.hpp"

namespace densbench::num {

std::array<std::size_t, 4> Lattice4::unravel(std::size_t idx) const {
  std::array<std::size_t, 4> at{};
  for (int a = 3; a >= 0; --a) {
    at[a] = idx % shape[a];
    idx /= shape[a];
  }
  return at;
}

std::array<double, 4> Lattice4::coord(std::size_t idx) const {
  const auto at = unravel(idx);
  std::array<double, 4> x{};
  for (int a = 0; a < 4; ++a) x[a] = origin[a] + spacing[a] * static_cast<double>(at[a]);
  return x;
}

std::size_t Lattice4::stride(int axis) const {
  std::size_t s = 1;
  for (int a = 3; a > axis; --a) s *= shape[a];
  return s;
}

Lattice4 Lattice4::interior(std::array<bool, 4> axes) const {
  Lattice4 out = *this;
  for (int a = 0; a < 4; ++a) {
    if (!axes[a]) continue;
    if (shape[a] < 3) throw Error(ErrorKind::InvalidArgument, "axis too short for a central stencil");
    out.shape[a] = shape[a] - 2;
    out.origin[a] = origin[a] + spacing[a];
  }
  return out;
}

Lattice4 Lattice4::cube(std::size_t nt, std::size_t n, double h, double dt, std::array<double, 4> origin) {
  return {{nt, n, n, n}, origin, {dt, h, h, h}};
}

std::string_view to_string(Provenance p) {
  switch (p) {
    case Provenance::Dirac: return "Dirac";
    case Provenance::KleinGordon: return "KleinGordon";
    case Provenance::Other: return "Other";
  }
  return "?";
}

double divergence_residual(const FourCurrent& current) {
  const Lattice4& lat = current.lattice;
  for (int a = 0; a < 4; ++a) {
    if (lat.shape[a] < 3) throw Error(ErrorKind::InvalidArgument, "stencil needs at least 3 points per axis");
  }
  const std::size_t n = lat.size();
  if (current.rho.size() != n || current.j[0].size() != n || current.j[1].size() != n || current.j[2].size() != n) {
    throw Error(ErrorKind::InvalidArgument, "current samples do not match the lattice");
  }
  const std::array<const std::vector<double>*, 4> comp{&current.rho, &current.j[0], &current.j[1], &current.j[2]};
  double worst = 0.0;
  for (std::size_t t = 1; t + 1 < lat.shape[0]; ++t) {
    for (std::size_t x = 1; x + 1 < lat.shape[1]; ++x) {
      for (std::size_t y = 1; y + 1 < lat.shape[2]; ++y) {
        for (std::size_t z = 1; z + 1 < lat.shape[3]; ++z) {
          const std::size_t idx = lat.index({t, x, y, z});
          double div = 0.0;
          for (int mu = 0; mu < 4; ++mu) {
            const std::size_t s = lat.stride(mu);
            const auto& f = *comp[mu];
            div += (f[idx + s] - f[idx - s]) / (2.0 * lat.spacing[mu]);
          }
          worst = std::max(worst, std::abs(div));
        }
      }
    }
  }
  return worst;
}

}  // namespace densbench::num
