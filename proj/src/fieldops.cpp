#include "densbench/fieldops.hpp"

#include <cmath>
#include <ostream>

#include <fmt/format.h>

#include "densbench/error.hpp"

namespace densbench::field {

namespace {

constexpr cplx kI{0.0, 1.0};

Eigen::Matrix2cd pauli(int k) {
  Eigen::Matrix2cd s;
  switch (k) {
    case 1: s << 0.0, 1.0, 1.0, 0.0; break;
    case 2: s << 0.0, -kI, kI, 0.0; break;
    default: s << 1.0, 0.0, 0.0, -1.0; break;
  }
  return s;
}

GammaSet build_dirac_representation() {
  GammaSet g;
  g.gamma[0] = Mat4::Zero();
  g.gamma[0].diagonal() << 1.0, 1.0, -1.0, -1.0;
  for (int k = 1; k <= 3; ++k) {
    g.gamma[k] = Mat4::Zero();
    g.gamma[k].topRightCorner<2, 2>() = pauli(k);
    g.gamma[k].bottomLeftCorner<2, 2>() = -pauli(k);
  }
  return g;
}

double dot(const Vec3& a, const std::array<double, 4>& x) { return a[0] * x[1] + a[1] * x[2] + a[2] * x[3]; }

}  // namespace

const GammaSet& GammaSet::dirac() {
  static const GammaSet g = build_dirac_representation();
  return g;
}

SpinorPlaneWave SpinorPlaneWave::make(const Vec3& momentum, double mass, int spin) {
  if (spin != 1 && spin != 2) throw Error(ErrorKind::InvalidArgument, "spin index must be 1 or 2");
  if (!(mass > 0.0)) throw Error(ErrorKind::InvalidArgument, "spinor normalization needs m > 0");
  SpinorPlaneWave w;
  w.momentum = momentum;
  w.mass = mass;
  w.spin = spin;
  const double p2 = momentum[0] * momentum[0] + momentum[1] * momentum[1] + momentum[2] * momentum[2];
  w.energy = std::sqrt(p2 + mass * mass);

  Eigen::Vector2cd chi = spin == 1 ? Eigen::Vector2cd(1.0, 0.0) : Eigen::Vector2cd(0.0, 1.0);
  Eigen::Matrix2cd sigma_p = Eigen::Matrix2cd::Zero();
  for (int k = 1; k <= 3; ++k) sigma_p += momentum[k - 1] * pauli(k);
  const double n = std::sqrt(w.energy + mass);
  w.amplitude.head<2>() = n * chi;
  w.amplitude.tail<2>() = (sigma_p * chi) / n;
  return w;
}

Spinor SpinorPlaneWave::at(const std::array<double, 4>& x) const {
  return amplitude * std::exp(-kI * (energy * x[0] - dot(momentum, x)));
}

Spinor SpinorPlaneWave::time_derivative(const std::array<double, 4>& x) const {
  return -kI * energy * at(x);
}

num::FourCurrent dirac_current(const SpinorField& field) {
  const auto& g = GammaSet::dirac();
  const std::size_t n = field.psi.size();
  if (n != field.lattice.size()) throw Error(ErrorKind::InvalidArgument, "spinor samples do not match the lattice");
  num::FourCurrent out;
  out.lattice = field.lattice;
  out.provenance = num::Provenance::Dirac;
  out.rho.resize(n);
  for (auto& c : out.j) c.resize(n);
  const std::array<Mat4, 3> alpha{g.alpha(1), g.alpha(2), g.alpha(3)};
  for (std::size_t i = 0; i < n; ++i) {
    const Spinor& psi = field.psi[i];
    out.rho[i] = psi.squaredNorm();
    for (int k = 0; k < 3; ++k) out.j[k][i] = psi.dot(alpha[k] * psi).real();
  }
  return out;
}

SpinorField dirac_hamiltonian_apply(const SpinorField& field, double mass, double charge) {
  const auto& g = GammaSet::dirac();
  const num::Lattice4& lat = field.lattice;
  if (field.psi.size() != lat.size()) throw Error(ErrorKind::InvalidArgument, "spinor samples do not match the lattice");
  if (!field.potential.empty() && field.potential.size() != lat.size()) {
    throw Error(ErrorKind::InvalidArgument, "potential samples do not match the lattice");
  }
  for (int a = 1; a < 4; ++a) {
    if (lat.shape[a] < 3) throw Error(ErrorKind::InvalidArgument, "lattice too coarse for the spatial stencil");
  }
  const num::Lattice4 inner = lat.interior({false, true, true, true});
  const std::array<Mat4, 3> alpha{g.alpha(1), g.alpha(2), g.alpha(3)};
  const Mat4 beta = g.beta();

  SpinorField out{inner, std::vector<Spinor>(inner.size()), {}};
  for (std::size_t o = 0; o < inner.size(); ++o) {
    auto at = inner.unravel(o);
    for (int a = 1; a < 4; ++a) ++at[a];
    const std::size_t idx = lat.index(at);
    const Spinor& psi = field.psi[idx];
    const FourPotential A = field.potential.empty() ? FourPotential{} : field.potential[idx];

    Spinor h = mass * (beta * psi) + charge * A[0] * psi;
    for (int k = 0; k < 3; ++k) {
      const std::size_t s = lat.stride(k + 1);
      const Spinor grad = (field.psi[idx + s] - field.psi[idx - s]) / (2.0 * lat.spacing[k + 1]);
      h += alpha[k] * (-kI * grad - charge * A[k + 1] * psi);
    }
    out.psi[o] = h;
  }
  return out;
}

KGPlaneWave KGPlaneWave::make(cplx amplitude, const Vec3& k, double mass, int sigma) {
  if (sigma != 1 && sigma != -1) throw Error(ErrorKind::InvalidArgument, "phase convention must be +1 or -1");
  KGPlaneWave w;
  w.amplitude = amplitude;
  w.k = k;
  w.sigma = sigma;
  w.omega = std::sqrt(k[0] * k[0] + k[1] * k[1] + k[2] * k[2] + mass * mass);
  return w;
}

KGPoint KGPlaneWave::at(const std::array<double, 4>& x) const {
  KGPoint p;
  p.phi = amplitude * std::exp(kI * (sigma * omega * x[0] + dot(k, x)));
  p.dphi[0] = kI * static_cast<double>(sigma) * omega * p.phi;
  for (int a = 0; a < 3; ++a) p.dphi[a + 1] = kI * k[a] * p.phi;
  return p;
}

KGField kg_field_from_values(const num::Lattice4& lattice, std::span<const cplx> phi, std::span<const double> V,
                             std::span<const FourPotential> A) {
  if (phi.size() != lattice.size() || (!V.empty() && V.size() != lattice.size()) ||
      (!A.empty() && A.size() != lattice.size())) {
    throw Error(ErrorKind::InvalidArgument, "field samples do not match the lattice");
  }
  const num::Lattice4 inner = lattice.interior({true, true, true, true});
  KGField out{inner, std::vector<KGPoint>(inner.size())};
  for (std::size_t o = 0; o < inner.size(); ++o) {
    auto at = inner.unravel(o);
    for (auto& c : at) ++c;
    const std::size_t idx = lattice.index(at);
    KGPoint& p = out.points[o];
    p.phi = phi[idx];
    for (int mu = 0; mu < 4; ++mu) {
      const std::size_t s = lattice.stride(mu);
      p.dphi[mu] = (phi[idx + s] - phi[idx - s]) / (2.0 * lattice.spacing[mu]);
    }
    if (!V.empty()) p.V = V[idx];
    if (!A.empty()) p.A = {A[idx][1], A[idx][2], A[idx][3]};
  }
  return out;
}

DensityCurrent kg_density_current(const KGPoint& p, double charge) {
  const cplx pc = std::conj(p.phi);
  const double mod2 = std::norm(p.phi);
  DensityCurrent out{};
  out.rho = (kI * (pc * p.dphi[0] - std::conj(p.dphi[0]) * p.phi)).real() - 2.0 * charge * p.V * mod2;
  for (int k = 0; k < 3; ++k) {
    out.j[k] = (kI * (std::conj(p.dphi[k + 1]) * p.phi - pc * p.dphi[k + 1])).real() - 2.0 * charge * p.A[k] * mod2;
  }
  return out;
}

num::FourCurrent kg_current(const KGField& field, double charge) {
  const std::size_t n = field.points.size();
  if (n != field.lattice.size()) throw Error(ErrorKind::InvalidArgument, "KG samples do not match the lattice");
  num::FourCurrent out;
  out.lattice = field.lattice;
  out.provenance = num::Provenance::KleinGordon;
  out.rho.resize(n);
  for (auto& c : out.j) c.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    const DensityCurrent dc = kg_density_current(field.points[i], charge);
    out.rho[i] = dc.rho;
    for (int k = 0; k < 3; ++k) out.j[k][i] = dc.j[k];
  }
  return out;
}

double kg_hamiltonian_density(const KGPoint& p, double charge, double mass) {
  double h = std::norm(p.dphi[0] + kI * charge * p.V * p.phi);
  for (int k = 0; k < 3; ++k) h += std::norm(p.dphi[k + 1] - kI * charge * p.A[k] * p.phi);
  return h + mass * mass * std::norm(p.phi);
}

std::vector<double> kg_hamiltonian_density(const KGField& field, double charge, double mass) {
  std::vector<double> out;
  out.reserve(field.points.size());
  for (const auto& p : field.points) out.push_back(kg_hamiltonian_density(p, charge, mass));
  return out;
}

void write_current_csv(std::ostream& os, const num::FourCurrent& current) {
  os << "t,x,y,z,rho,j1,j2,j3\n";
  for (std::size_t i = 0; i < current.rho.size(); ++i) {
    const auto x = current.lattice.coord(i);
    os << fmt::format("{:.17g},{:.17g},{:.17g},{:.17g},{:.17g},{:.17g},{:.17g},{:.17g}\n", x[0], x[1], x[2], x[3],
                      current.rho[i], current.j[0][i], current.j[1][i], current.j[2][i]);
  }
}

}  // namespace densbench::field
