#include "doctest.h"

#include <random>

#include "densbench/error.hpp"
#include "densbench/fieldops.hpp"
#include "support.hpp"

using namespace densbench;
using namespace densbench::field;

namespace {

constexpr cplx kI{0.0, 1.0};

Mat4 slash(const std::array<double, 4>& p_upper) {
  const auto& g = GammaSet::dirac();
  Mat4 s = Mat4::Zero();
  for (int mu = 0; mu < 4; ++mu) s += kMetric[mu] * p_upper[mu] * g.gamma[mu];
  return s;
}

double max_abs(const SpinorField& a, const std::vector<Spinor>& b) {
  double worst = 0.0;
  for (std::size_t i = 0; i < a.psi.size(); ++i) worst = std::max(worst, (a.psi[i] - b[i]).cwiseAbs().maxCoeff());
  return worst;
}

}  // namespace

TEST_CASE("gamma matrices satisfy the Clifford algebra") {
  const auto& g = GammaSet::dirac();
  for (int mu = 0; mu < 4; ++mu) {
    for (int nu = 0; nu < 4; ++nu) {
      const Mat4 anti = g.gamma[mu] * g.gamma[nu] + g.gamma[nu] * g.gamma[mu];
      const Mat4 expected = (mu == nu ? 2.0 * kMetric[mu] : 0.0) * Mat4::Identity();
      CHECK((anti - expected).norm() == 0.0);
    }
  }
  CHECK((g.gamma[0].adjoint() - g.gamma[0]).norm() == 0.0);
  for (int k = 1; k <= 3; ++k) CHECK((g.gamma[k].adjoint() + g.gamma[k]).norm() == 0.0);
}

TEST_CASE("plane-wave spinors solve the momentum-space Dirac equation") {
  for (const Vec3& p : {Vec3{0, 0, 0}, Vec3{0.3, -1.2, 0.5}, Vec3{2.0, 0.1, -0.7}}) {
    for (int s : {1, 2}) {
      const auto w = SpinorPlaneWave::make(p, 1.3, s);
      const Spinor r = (slash({w.energy, p[0], p[1], p[2]}) - w.mass * Mat4::Identity()) * w.amplitude;
      CHECK(r.norm() < 1e-12);
      const cplx ubar_u = w.amplitude.dot(GammaSet::dirac().gamma[0] * w.amplitude);
      CHECK(std::abs(ubar_u - 2.0 * w.mass) < 1e-12);
    }
  }
  CHECK_THROWS_AS(SpinorPlaneWave::make({0, 0, 0}, 1.0, 3), Error);
}

TEST_CASE("Dirac current of plane waves") {
  const auto lat = num::Lattice4::cube(3, 3, 0.2, 0.2);
  const auto rest = SpinorPlaneWave::make({0, 0, 0}, 0.8, 2);
  const auto c0 = dirac_current(sample_spinor_field(lat, [&](const auto& x) { return rest.at(x); }));
  for (std::size_t i = 0; i < lat.size(); ++i) {
    CHECK(std::abs(c0.rho[i] - 1.6) < 1e-12);
    for (int k = 0; k < 3; ++k) CHECK(std::abs(c0.j[k][i]) < 1e-12);
  }

  const Vec3 p{0.4, -0.9, 1.5};
  const auto moving = SpinorPlaneWave::make(p, 0.8, 1);
  const auto c1 = dirac_current(sample_spinor_field(lat, [&](const auto& x) { return moving.at(x); }));
  for (std::size_t i = 0; i < lat.size(); ++i) {
    CHECK(std::abs(c1.rho[i] - 2.0 * moving.energy) < 1e-12);
    for (int k = 0; k < 3; ++k) CHECK(std::abs(c1.j[k][i] - 2.0 * p[k]) < 1e-12);
  }
  CHECK(c1.provenance == num::Provenance::Dirac);

  const auto zero = dirac_current(sample_spinor_field(lat, [](const auto&) { return Spinor(Spinor::Zero()); }));
  for (std::size_t i = 0; i < lat.size(); ++i) CHECK(zero.rho[i] == 0.0);
}

TEST_CASE("Dirac density is positive and blind to the potential") {
  std::mt19937 rng(2024);
  std::normal_distribution<double> g(0.0, 1.0);
  const num::Lattice4 lat{{1, 100, 10, 10}, {}, {1, 1, 1, 1}};
  SpinorField f{lat, {}, {}};
  for (std::size_t i = 0; i < lat.size(); ++i) {
    Spinor s;
    for (int a = 0; a < 4; ++a) s[a] = {g(rng), g(rng)};
    f.psi.push_back(s);
  }
  const auto c = dirac_current(f);
  int negative = 0;
  for (double r : c.rho) negative += r < 0.0;
  CHECK(negative == 0);

  SpinorField shifted = f;
  shifted.potential.resize(lat.size());
  for (auto& A : shifted.potential) A = {g(rng), g(rng), g(rng), g(rng)};
  const auto c2 = dirac_current(shifted);
  CHECK(c2.rho == c.rho);
  CHECK(c2.j == c.j);
}

TEST_CASE("Dirac Hamiltonian on a rest spinor in a constant potential") {
  const auto lat = num::Lattice4::cube(1, 4, 0.3, 0.1);
  const double m = 1.1, e = 0.7, V = 0.45;
  const auto rest = SpinorPlaneWave::make({0, 0, 0}, m, 1);
  SpinorField f = sample_spinor_field(lat, [&](const auto& x) { return rest.at(x); });
  f.potential.assign(lat.size(), FourPotential{V, 0, 0, 0});
  const auto h = dirac_hamiltonian_apply(f, m, e);
  CHECK(h.lattice.shape == std::array<std::size_t, 4>{1, 2, 2, 2});
  for (std::size_t i = 0; i < h.psi.size(); ++i) {
    const auto x = h.lattice.coord(i);
    CHECK((h.psi[i] - (m + e * V) * rest.at(x)).norm() < 1e-13);
  }
}

TEST_CASE("H psi = i d_t psi on plane waves, second order in h") {
  const double m = 1.0;
  const auto w = SpinorPlaneWave::make({0.9, -0.4, 0.6}, m, 2);
  double prev = 0.0;
  for (std::size_t n : {9, 17, 33}) {
    const auto lat = testing::box(n, 2.0);
    const auto h = dirac_hamiltonian_apply(sample_spinor_field(lat, [&](const auto& x) { return w.at(x); }), m, 0.0);
    std::vector<Spinor> rhs;
    for (std::size_t i = 0; i < h.psi.size(); ++i) rhs.push_back(kI * w.time_derivative(h.lattice.coord(i)));
    const double err = max_abs(h, rhs);
    // H psi = E psi up to the same discretization error.
    std::vector<Spinor> eig;
    for (std::size_t i = 0; i < h.psi.size(); ++i) eig.push_back(w.energy * w.at(h.lattice.coord(i)));
    CHECK(std::abs(max_abs(h, eig) - err) < 1e-12);
    if (prev > 0.0) CHECK(testing::observed_order(prev, err) >= 1.9);
    prev = err;
  }
}

TEST_CASE("Dirac Hamiltonian needs a spatial stencil") {
  const num::Lattice4 lat{{1, 2, 5, 5}, {}, {1, 1, 1, 1}};
  SpinorField f{lat, std::vector<Spinor>(lat.size(), Spinor::Zero()), {}};
  CHECK_THROWS_AS(dirac_hamiltonian_apply(f, 1.0, 0.0), Error);
}

TEST_CASE("KG plane-wave density, current and energy density") {
  const cplx N{0.6, -0.3};
  const Vec3 k{0.5, 1.0, -0.2};
  const double m = 0.9;
  const auto w = KGPlaneWave::make(N, k, m);
  CHECK(std::abs(w.omega * w.omega - (0.25 + 1.0 + 0.04 + m * m)) < 1e-12);
  for (double t : {0.0, 0.4}) {
    const KGPoint p = w.at({t, 0.3, -0.1, 0.7});
    const auto dc = kg_density_current(p, 0.0);
    CHECK(std::abs(dc.rho - 2.0 * w.omega * std::norm(N)) < 1e-12);
    for (int a = 0; a < 3; ++a) CHECK(std::abs(dc.j[a] - 2.0 * k[a] * std::norm(N)) < 1e-12);
    const double k2 = 0.25 + 1.0 + 0.04;
    CHECK(std::abs(kg_hamiltonian_density(p, 0.0, m) - (w.omega * w.omega + k2 + m * m) * std::norm(N)) < 1e-12);
  }
  // The other phase convention flips the density.
  const auto flipped = KGPlaneWave::make(N, k, m, +1);
  CHECK(std::abs(kg_density_current(flipped.at({0, 0, 0, 0}), 0.0).rho + 2.0 * w.omega * std::norm(N)) < 1e-12);
}

TEST_CASE("KG density of a real field vanishes; a potential shifts it") {
  KGPoint real;
  real.phi = 0.8;
  real.dphi = {0.3, -1.0, 0.2, 0.5};
  CHECK(kg_density_current(real, 0.0).rho == 0.0);

  const auto w = KGPlaneWave::make({0.5, 0.5}, {0, 0, 0}, 1.0);
  KGPoint p = w.at({0.2, 0, 0, 0});
  const double free_rho = kg_density_current(p, 0.8).rho;
  p.V = 0.3;
  CHECK(std::abs(kg_density_current(p, 0.8).rho - (free_rho - 2.0 * 0.8 * 0.3 * std::norm(p.phi))) < 1e-14);

  KGPoint zero;
  CHECK(kg_hamiltonian_density(zero, 1.0, 1.0) == 0.0);
}

TEST_CASE("KG density takes both signs; energy density never negative") {
  std::mt19937 rng(11);
  std::normal_distribution<double> g(0.0, 1.0);
  int pos = 0, neg = 0;
  for (int i = 0; i < 10000; ++i) {
    KGPoint p;
    p.phi = {g(rng), g(rng)};
    for (auto& d : p.dphi) d = {g(rng), g(rng)};
    p.V = g(rng);
    p.A = {g(rng), g(rng), g(rng)};
    const double rho = kg_density_current(p, 0.7).rho;
    pos += rho > 0.0;
    neg += rho < 0.0;
    CHECK(kg_hamiltonian_density(p, 0.7, 1.2) >= 0.0);
  }
  CHECK(pos > 0);
  CHECK(neg > 0);
}

TEST_CASE("finite-difference KG samples match analytic derivatives") {
  const auto w = KGPlaneWave::make({1.0, 0.2}, {0.3, -0.5, 0.8}, 1.0);
  double prev = 0.0;
  for (std::size_t n : {9, 17}) {
    const auto lat = testing::box(n, 1.0);
    std::vector<cplx> values;
    for (std::size_t i = 0; i < lat.size(); ++i) values.push_back(w.at(lat.coord(i)).phi);
    const KGField f = kg_field_from_values(lat, values);
    double err = 0.0;
    for (std::size_t i = 0; i < f.points.size(); ++i) {
      const KGPoint exact = w.at(f.lattice.coord(i));
      for (int mu = 0; mu < 4; ++mu) err = std::max(err, std::abs(f.points[i].dphi[mu] - exact.dphi[mu]));
    }
    if (prev > 0.0) CHECK(testing::observed_order(prev, err) >= 1.9);
    prev = err;
  }
}

TEST_CASE("currents are conserved") {
  // Constant currents: exact up to rounding.
  const auto lat = testing::box(5, 1.0);
  const auto dw = SpinorPlaneWave::make({0.3, 0.2, -0.8}, 1.0, 1);
  CHECK(num::divergence_residual(dirac_current(sample_spinor_field(lat, [&](const auto& x) { return dw.at(x); }))) < 1e-10);
  const auto kw = KGPlaneWave::make({0.7, 0.1}, {0.3, 0.2, -0.8}, 1.0);
  CHECK(num::divergence_residual(kg_current(sample_kg_field(lat, [&](const auto& x) { return kw.at(x); }), 0.0)) < 1e-10);

  // Superpositions: the discrete divergence shrinks like h^2.
  double prev_d = 0.0, prev_k = 0.0;
  for (std::size_t n : {9, 17, 33}) {
    const auto l = testing::box(n, 2.0);
    const double rd = num::divergence_residual(dirac_current(testing::dirac_superposition(l, 1.0)));
    const double rk = num::divergence_residual(kg_current(testing::kg_superposition(l, 1.0), 0.0));
    if (prev_d > 0.0) {
      CHECK(testing::observed_order(prev_d, rd) >= 1.9);
      CHECK(testing::observed_order(prev_k, rk) >= 1.9);
    }
    prev_d = rd;
    prev_k = rk;
  }
}
