#pragma once

// Numeric Dirac and Klein-Gordon fields on a (t, x, y, z) lattice: gamma
// matrices in the Dirac representation, plane-wave solutions, conserved
// currents and the Hamiltonian action. Metric (+, -, -, -), hbar = c = 1.

#include <array>
#include <complex>
#include <iosfwd>
#include <span>
#include <vector>

#include <Eigen/Core>

#include "densbench/lattice.hpp"

namespace densbench::field {

using cplx = std::complex<double>;
using Spinor = Eigen::Matrix<cplx, 4, 1>;
using Mat4 = Eigen::Matrix<cplx, 4, 4>;
using Vec3 = std::array<double, 3>;
/// Contravariant A^mu = (V, A^1, A^2, A^3).
using FourPotential = std::array<double, 4>;

inline constexpr std::array<double, 4> kMetric{1.0, -1.0, -1.0, -1.0};

struct GammaSet {
  std::array<Mat4, 4> gamma;

  static const GammaSet& dirac();
  Mat4 beta() const { return gamma[0]; }
  /// alpha^k = gamma^0 gamma^k, k = 1..3
  Mat4 alpha(int k) const { return gamma[0] * gamma[k]; }
};

/// Positive-energy solution u(p, s) e^{-i(E t - p.x)} with ubar u = 2m.
struct SpinorPlaneWave {
  Vec3 momentum{};
  double mass = 1.0;
  double energy = 1.0;
  int spin = 1;  // 1 = up, 2 = down along z
  Spinor amplitude = Spinor::Zero();

  static SpinorPlaneWave make(const Vec3& momentum, double mass, int spin);

  Spinor at(const std::array<double, 4>& x) const;
  Spinor time_derivative(const std::array<double, 4>& x) const;
};

struct SpinorField {
  num::Lattice4 lattice;
  std::vector<Spinor> psi;
  /// Background A^mu per point; empty means zero everywhere.
  std::vector<FourPotential> potential;
};

template <class F>
SpinorField sample_spinor_field(const num::Lattice4& lattice, F&& psi_at) {
  SpinorField out{lattice, {}, {}};
  out.psi.reserve(lattice.size());
  for (std::size_t i = 0; i < lattice.size(); ++i) out.psi.push_back(psi_at(lattice.coord(i)));
  return out;
}

/// rho = psi^dagger psi, j^k = psibar gamma^k psi. Reads only `psi`.
num::FourCurrent dirac_current(const SpinorField& field);

/// H psi = [alpha.(-i grad - e A) + e V + beta m] psi on the points interior
/// in x, y and z. Spatial derivatives by central differences.
SpinorField dirac_hamiltonian_apply(const SpinorField& field, double mass, double charge);

/// One sample of a KG field: value, d_mu phi (index 0 = time), and the
/// potentials at that point.
struct KGPoint {
  cplx phi{};
  std::array<cplx, 4> dphi{};
  double V = 0.0;
  Vec3 A{};
};

/// N e^{i (sigma omega t + k.x)}, omega^2 = k^2 + m^2. sigma = -1 is the
/// usual positive-frequency choice.
struct KGPlaneWave {
  cplx amplitude{1.0, 0.0};
  double omega = 1.0;
  Vec3 k{};
  int sigma = -1;

  static KGPlaneWave make(cplx amplitude, const Vec3& k, double mass, int sigma = -1);

  KGPoint at(const std::array<double, 4>& x) const;
};

struct KGField {
  num::Lattice4 lattice;
  std::vector<KGPoint> points;
};

template <class F>
KGField sample_kg_field(const num::Lattice4& lattice, F&& point_at) {
  KGField out{lattice, {}};
  out.points.reserve(lattice.size());
  for (std::size_t i = 0; i < lattice.size(); ++i) out.points.push_back(point_at(lattice.coord(i)));
  return out;
}

/// Builds KGPoints on the fully interior lattice from bare values, taking
/// all four derivatives by central differences.
KGField kg_field_from_values(const num::Lattice4& lattice, std::span<const cplx> phi,
                             std::span<const double> V = {}, std::span<const FourPotential> A = {});

struct DensityCurrent {
  double rho;
  Vec3 j;
};

/// rho = i(phi* phi_0 - phi*_0 phi) - 2eV|phi|^2, j = i((grad phi*) phi - phi* grad phi) - 2eA|phi|^2.
DensityCurrent kg_density_current(const KGPoint& p, double charge);
num::FourCurrent kg_current(const KGField& field, double charge);

/// |phi_0 + ieV phi|^2 + sum_k |phi_k - ieA_k phi|^2 + m^2 |phi|^2
double kg_hamiltonian_density(const KGPoint& p, double charge, double mass);
std::vector<double> kg_hamiltonian_density(const KGField& field, double charge, double mass);

/// CSV: t,x,y,z,rho,j1,j2,j3 with 17 significant digits.
void write_current_csv(std::ostream& os, const num::FourCurrent& current);

}  // namespace densbench::field
