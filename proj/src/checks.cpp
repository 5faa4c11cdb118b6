#include "densbench/checks.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include <fmt/format.h>

#include "densbench/dims.hpp"
#include "densbench/fieldops.hpp"
#include "densbench/harmonics.hpp"
#include "densbench/models.hpp"
#include "densbench/quadrature.hpp"
#include "densbench/symexpr.hpp"
#include "densbench/well.hpp"

namespace densbench::checks {

namespace {

using field::cplx;
constexpr cplx kI{0.0, 1.0};

Check exact(std::string name, std::string claim, bool ok, std::string detail) {
  return {std::move(name), std::move(claim), ok, std::move(detail)};
}

Check at_most(std::string name, std::string claim, double value, double tolerance) {
  Check c{std::move(name), std::move(claim), value <= tolerance, {}};
  c.detail = fmt::format("{:.12g} <= {:.12g}", value, tolerance);
  c.value = value;
  c.tolerance = tolerance;
  return c;
}

Check at_least(std::string name, std::string claim, double value, double bound) {
  Check c{std::move(name), std::move(claim), value >= bound, {}};
  c.detail = fmt::format("{:.12g} >= {:.12g}", value, bound);
  c.value = value;
  c.tolerance = bound;
  return c;
}

num::Lattice4 box(std::size_t n, double extent) {
  const double h = extent / static_cast<double>(n - 1);
  return num::Lattice4::cube(n, n, h, h);
}

std::array<std::size_t, 3> ladder(std::size_t n) { return {n, 2 * n - 1, 4 * n - 3}; }

double order(double coarse, double fine) { return std::log2(coarse / fine); }

field::SpinorField dirac_superposition(const num::Lattice4& lat, double mass) {
  const auto a = field::SpinorPlaneWave::make({0.7, -0.3, 0.4}, mass, 1);
  const auto b = field::SpinorPlaneWave::make({-0.5, 0.9, 0.2}, mass, 2);
  const auto c = field::SpinorPlaneWave::make({0.1, 0.2, -1.1}, mass, 1);
  return field::sample_spinor_field(lat, [&](const std::array<double, 4>& x) {
    return field::Spinor(a.at(x) + 0.6 * b.at(x) + cplx(0.2, 0.5) * c.at(x));
  });
}

field::KGField kg_superposition(const num::Lattice4& lat, double mass) {
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

std::string symmetry_name(sym::TermSymmetry s) { return std::string(sym::to_string(s)); }

}  // namespace

bool all_passed(const std::vector<Check>& checks) {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
}

std::vector<Check> dimension_checks() {
  using namespace dims;
  std::vector<Check> out;
  const Dim psi = infer_field_dimension(kDerivative);
  out.push_back(exact("dim.dirac_field", "Dirac field has dimension [L^-3/2]", psi == Dim(-3, 2),
                      "dim(psi) = " + psi.str()));
  const Dim phi = infer_field_dimension(kDerivative.pow(2));
  out.push_back(exact("dim.kg_field", "KG field has dimension [L^-1]", phi == Dim(-1), "dim(phi) = " + phi.str()));

  const FieldDims fd{{"psi", psi}, {"phi", phi}};
  const TermSpec dirac_rho{{{"psi", 2}}, 0, {}};
  out.push_back(exact("dim.dirac_density", "psi^dagger psi is a density [L^-3]",
                      check_density_dimension(dirac_rho, fd), term_dimension(dirac_rho, fd).str()));
  const TermSpec kg_rate{{{"phi", 2}}, 1, {}};
  const TermSpec kg_potential{{{"phi", 2}}, 0, Dim(-1)};  // e V phi* phi
  const bool kg_ok = check_density_dimension(kg_rate, fd) && check_density_dimension(kg_potential, fd);
  out.push_back(exact("dim.kg_density", "every term of the KG charge density is a density [L^-3]", kg_ok,
                      term_dimension(kg_rate, fd).str() + ", " + term_dimension(kg_potential, fd).str()));
  const TermSpec bare{{{"phi", 2}}, 0, {}};
  out.push_back(exact("dim.kg_modulus", "phi* phi alone is not a density", !check_density_dimension(bare, fd),
                      term_dimension(bare, fd).str()));
  return out;
}

std::vector<Check> derivation_checks() {
  using namespace sym;
  std::vector<Check> out;
  const Expr dirac = models::dirac_lagrangian();
  bool rows_ok = true;
  for (int a = 0; a < 4; ++a) {
    rows_ok = rows_ok && canonicalize(euler_lagrange(dirac, psibar(a))) == canonicalize(-models::dirac_equation_row(a));
  }
  out.push_back(exact("derive.dirac_equation", "varying psibar in the Dirac Lagrangian gives the Dirac equation",
                      rows_ok, rows_ok ? "4 rows match" : "mismatch"));

  const Expr kg = models::kg_lagrangian();
  const Expr kg_eq = euler_lagrange(kg, phi_conj());
  const bool kg_ok = canonicalize(kg_eq) == canonicalize(models::kg_field_equation());
  out.push_back(exact("derive.kg_equation", "varying phi* in the KG Lagrangian gives D_mu D^mu phi + m^2 phi = 0",
                      kg_ok, fmt::format("{} terms", term_count(canonicalize(kg_eq)))));

  const Expr h = legendre_transform(kg, models::kg_fields());
  const Expr quoted = models::kg_hamiltonian_density();
  const bool same = canonicalize(h) == canonicalize(quoted);
  const Expr gap = canonicalize(h - quoted);
  out.push_back(exact("derive.kg_hamiltonian",
                      "Legendre transform of the KG Lagrangian equals the quoted Hamiltonian density", same,
                      same ? "identical" : "differs by " + std::to_string(term_count(gap)) + " terms"));
  const bool shifted = canonicalize(h) == canonicalize(quoted + Expr(charge()) * Expr(scalar_potential()) *
                                                                     models::kg_density());
  out.push_back(exact("derive.kg_hamiltonian_shift",
                      "Legendre transform of the KG Lagrangian equals the quoted density plus e V rho", shifted,
                      shifted ? "identical" : "mismatch"));
  const bool free_same = canonicalize(substitute(h, charge(), Expr(0))) ==
                         canonicalize(substitute(quoted, charge(), Expr(0)));
  out.push_back(exact("derive.kg_hamiltonian_free", "at e = 0 the two Hamiltonian densities coincide", free_same,
                      free_same ? "identical" : "mismatch"));

  const int rates = max_time_derivatives(legendre_transform(dirac, models::dirac_fields()));
  out.push_back(exact("derive.dirac_hamiltonian", "the Dirac Hamiltonian density carries no time derivative",
                      rates == 0, fmt::format("max time derivatives {}", rates)));
  return out;
}

std::vector<Check> symmetry_checks() {
  using namespace sym;
  std::vector<Check> out;
  const auto h = classify_time_symmetry(models::kg_hamiltonian_density());
  out.push_back(exact("sym.kg_hamiltonian", "KG Hamiltonian density is symmetric in phi <-> phi*",
                      h == TermSymmetry::Symmetric, symmetry_name(h)));
  const auto rho = classify_time_symmetry(models::kg_density());
  out.push_back(exact("sym.kg_density", "KG charge density is antisymmetric in phi <-> phi*",
                      rho == TermSymmetry::Antisymmetric, symmetry_name(rho)));
  const auto dirac = classify_time_symmetry(models::dirac_density(), "psi");
  out.push_back(exact("sym.dirac_density", "Dirac density has no time derivative",
                      dirac == TermSymmetry::NoTimeDerivative, symmetry_name(dirac)));
  const Expr real = substitute_real(models::kg_density(), true);
  out.push_back(exact("sym.real_field", "KG charge density vanishes for a real field at e = 0", is_zero(real),
                      "reduces to " + (is_zero(real) ? std::string("0") : serialize(real))));
  return out;
}

std::vector<Check> continuity_checks(const Settings& s) {
  std::vector<Check> out;
  const auto lat = box(std::max<std::size_t>(s.lattice_points, 5), 1.0);
  const auto dw = field::SpinorPlaneWave::make({0.3, 0.2, -0.8}, 1.0, 1);
  out.push_back(at_most("continuity.dirac_plane_wave", "Dirac current of a plane wave is conserved",
                        num::divergence_residual(field::dirac_current(
                            field::sample_spinor_field(lat, [&](const auto& x) { return dw.at(x); }))),
                        1e-10));
  const auto kw = field::KGPlaneWave::make({0.7, 0.1}, {0.3, 0.2, -0.8}, 1.0);
  out.push_back(at_most("continuity.kg_plane_wave", "KG current of a plane wave is conserved",
                        num::divergence_residual(field::kg_current(
                            field::sample_kg_field(lat, [&](const auto& x) { return kw.at(x); }), 0.0)),
                        1e-10));

  std::vector<double> rd, rk;
  for (std::size_t n : ladder(s.lattice_points)) {
    const auto l = box(n, 2.0);
    rd.push_back(num::divergence_residual(field::dirac_current(dirac_superposition(l, 1.0))));
    rk.push_back(num::divergence_residual(field::kg_current(kg_superposition(l, 1.0), 0.0)));
  }
  for (std::size_t i = 1; i < rd.size(); ++i) {
    out.push_back(at_least(fmt::format("continuity.dirac_order_{}", i),
                           "Dirac divergence residual on a superposition falls like h^2", order(rd[i - 1], rd[i]),
                           1.9));
    out.push_back(at_least(fmt::format("continuity.kg_order_{}", i),
                           "KG divergence residual on a superposition falls like h^2", order(rk[i - 1], rk[i]), 1.9));
  }
  return out;
}

std::vector<Check> dirac_consistency_checks(const Settings& s) {
  std::vector<Check> out;
  const double m = 1.0;
  const auto w = field::SpinorPlaneWave::make({0.9, -0.4, 0.6}, m, 2);
  std::vector<double> errs;
  double constant = 0.0;
  for (std::size_t n : ladder(s.lattice_points)) {
    const auto lat = box(n, 2.0);
    const auto h = field::dirac_hamiltonian_apply(field::sample_spinor_field(lat, [&](const auto& x) { return w.at(x); }),
                                                  m, 0.0);
    double err = 0.0;
    for (std::size_t i = 0; i < h.psi.size(); ++i) {
      const auto x = h.lattice.coord(i);
      err = std::max(err, (h.psi[i] - kI * w.time_derivative(x)).cwiseAbs().maxCoeff());
    }
    const double hs = lat.spacing[1];
    constant = std::max(constant, err / (hs * hs));
    errs.push_back(err);
  }
  for (std::size_t i = 1; i < errs.size(); ++i) {
    out.push_back(at_least(fmt::format("dirac.order_{}", i), "(H - i d_t) psi on a plane wave falls like h^2",
                           order(errs[i - 1], errs[i]), 1.9));
  }
  Check c{"dirac.h2_constant", "max |(H - i d_t) psi| <= C h^2 with a bounded C", std::isfinite(constant), {}};
  c.detail = fmt::format("C = {:.12g}", constant);
  c.value = constant;
  out.push_back(c);

  const double e = 0.7, V = 0.45;
  const auto moving = field::SpinorPlaneWave::make({0.4, -0.2, 0.3}, m, 1);
  const auto lat = box(std::max<std::size_t>(s.lattice_points, 5), 1.0);
  field::SpinorField f = field::sample_spinor_field(lat, [&](const auto& x) { return moving.at(x); });
  const auto h0 = field::dirac_hamiltonian_apply(f, m, e);
  f.potential.assign(lat.size(), field::FourPotential{V, 0.0, 0.0, 0.0});
  const auto hv = field::dirac_hamiltonian_apply(f, m, e);
  double shift = 0.0;
  for (std::size_t i = 0; i < hv.psi.size(); ++i) {
    const auto& psi = f.psi[lat.index([&] {
      auto at = hv.lattice.unravel(i);
      for (int a = 1; a < 4; ++a) ++at[a];
      return at;
    }())];
    shift = std::max(shift, (hv.psi[i] - h0.psi[i] - e * V * psi).cwiseAbs().maxCoeff());
  }
  out.push_back(at_most("dirac.potential_shift", "a constant potential V shifts the energy by e V", shift, 1e-10));
  return out;
}

std::vector<Check> positivity_checks(const Settings& s) {
  std::vector<Check> out;
  std::mt19937 rng(s.seed);
  std::normal_distribution<double> g(0.0, 1.0);

  const num::Lattice4 lat{{1, s.samples, 1, 1}, {}, {1, 1, 1, 1}};
  field::SpinorField f{lat, {}, {}};
  for (std::size_t i = 0; i < lat.size(); ++i) {
    field::Spinor psi;
    for (int a = 0; a < 4; ++a) psi[a] = {g(rng), g(rng)};
    f.psi.push_back(psi);
  }
  const auto c = field::dirac_current(f);
  const auto violations = std::count_if(c.rho.begin(), c.rho.end(), [](double r) { return r < 0.0; });
  out.push_back(exact("positivity.dirac_density", "Dirac density is never negative", violations == 0,
                      fmt::format("{} negative of {}", violations, c.rho.size())));

  std::size_t pos = 0, neg = 0, energy_neg = 0;
  for (std::size_t i = 0; i < s.samples; ++i) {
    field::KGPoint p;
    p.phi = {g(rng), g(rng)};
    for (auto& d : p.dphi) d = {g(rng), g(rng)};
    p.V = g(rng);
    p.A = {g(rng), g(rng), g(rng)};
    const double rho = field::kg_density_current(p, 0.7).rho;
    pos += rho > 0.0;
    neg += rho < 0.0;
    energy_neg += field::kg_hamiltonian_density(p, 0.7, 1.2) < 0.0;
  }
  out.push_back(exact("positivity.kg_density", "KG charge density takes both signs", pos > 0 && neg > 0,
                      fmt::format("{} positive, {} negative", pos, neg)));
  out.push_back(exact("positivity.kg_energy", "KG energy density is never negative", energy_neg == 0,
                      fmt::format("{} negative of {}", energy_neg, s.samples)));
  return out;
}

std::vector<Check> numerics_checks(const Settings& s) {
  std::vector<Check> out;
  const double R = s.experiment.radius;
  const num::BallGrid grid(R, s.experiment.grid);
  const double volume = 4.0 / 3.0 * std::numbers::pi * R * R * R;
  const auto ones = grid.sample([](const num::BallGrid::Point&) { return cplx(1.0); });
  out.push_back(at_most("numerics.volume", "ball quadrature reproduces the volume",
                        std::abs(num::integrate_ball(ones, grid) - volume) / volume, 1e-12));

  std::vector<std::pair<int, int>> lm;
  for (int l = 0; l <= 2; ++l) {
    for (int m = -l; m <= l; ++m) lm.emplace_back(l, m);
  }
  const num::BallGrid shell(1.0, {1, 2, 16, 16});
  double gram = 0.0;
  for (const auto& [l1, m1] : lm) {
    for (const auto& [l2, m2] : lm) {
      cplx acc = 0.0;
      for (std::size_t i = 0; i < shell.size(); ++i) {
        const auto p = shell.point(i);
        acc += p.weight / (p.r * p.r) *  // radial measure dr over [0, 1]
               std::conj(num::spherical_harmonic(l1, m1, p.theta, p.phi)) *
               num::spherical_harmonic(l2, m2, p.theta, p.phi);
      }
      gram = std::max(gram, std::abs(acc - (l1 == l2 && m1 == m2 ? 1.0 : 0.0)));
    }
  }
  out.push_back(at_most("numerics.harmonic_gram", "spherical harmonics up to l = 2 are orthonormal", gram, 1e-12));

  const auto mode = num::solve_well_mode(1, 1.0, 1.0);
  out.push_back(at_most("numerics.well_k1", "l = 1 well wavenumber k R = 4.493409457909064",
                        std::abs(mode.k * mode.radius - 4.493409457909064), 1e-9));
  return out;
}

OrthogonalityOutcome orthogonality_checks(const Settings& s) {
  const auto& cfg = s.experiment;
  OrthogonalityOutcome out;
  out.report = experiment::run_orthogonality_experiment(cfg);
  const auto& rep = out.report;
  auto& checks = out.checks;

  checks.push_back(at_most("orthogonality.free_overlap", "normalized s and p states are orthogonal at V = 0",
                           std::abs(rep.overlap_free.value), 1e-10));
  checks.push_back(at_most("orthogonality.normalization", "both states have unit self inner product",
                           std::max(std::abs(std::abs(rep.self0.value) - 1.0), std::abs(std::abs(rep.self1.value) - 1.0)),
                           1e-10));

  const bool coupled = cfg.charge != 0.0 && cfg.source_charge != 0.0;
  for (const auto& p : rep.sweep) {
    const double u = std::abs(p.interaction.value);
    if (coupled) {
      Check c{fmt::format("orthogonality.U_resolved_d={}", p.distance),
              fmt::format("U(d={}) is nonzero and exceeds 10x its refinement error", p.distance),
              u > 10.0 * p.interaction.error, {}};
      c.detail = fmt::format("|U| = {:.12g}, error = {:.12g}", u, p.interaction.error);
      c.value = u;
      c.tolerance = 10.0 * p.interaction.error;
      checks.push_back(c);
    } else {
      checks.push_back(at_most(fmt::format("orthogonality.U_zero_d={}", p.distance),
                               fmt::format("U(d={}) vanishes without coupling", p.distance), u, 0.0));
    }
  }
  if (coupled && rep.sweep.size() > 1) {
    checks.push_back(exact("orthogonality.monotone", "|U| decreases strictly as the charge moves away",
                           rep.strictly_decreasing, rep.strictly_decreasing ? "strictly decreasing" : "not monotone"));
  }

  if (!rep.sweep.empty()) {
    const num::BallGrid grid(cfg.radius, rep.fine_grid);
    const auto s0 = experiment::normalize_kg_state(
        experiment::make_state(num::solve_well_mode(0, cfg.radius, cfg.mass), 0, cfg.sigma), grid);
    const auto s1 = experiment::normalize_kg_state(
        experiment::make_state(num::solve_well_mode(1, cfg.radius, cfg.mass), 0, cfg.sigma), grid);
    const double d = rep.sweep.front().distance;
    const auto v = experiment::external_potential({cfg.source_charge, d}, grid);
    const cplx u = experiment::inner_product(s0, s1, v, cfg.charge, grid, cfg.time).interaction;
    const cplx u_e = experiment::inner_product(s0, s1, v, 2.0 * cfg.charge, grid, cfg.time).interaction;
    const auto v_q = experiment::external_potential({2.0 * cfg.source_charge, d}, grid);
    const cplx u_q = experiment::inner_product(s0, s1, v_q, cfg.charge, grid, cfg.time).interaction;
    const double scale = std::max(std::abs(u), 1e-300);
    checks.push_back(at_most("orthogonality.linear_in_e", "doubling e doubles U",
                             std::abs(u_e - 2.0 * u) / scale * (coupled ? 1.0 : 0.0), 1e-10));
    checks.push_back(at_most("orthogonality.linear_in_q", "doubling q doubles U",
                             std::abs(u_q - 2.0 * u) / scale * (coupled ? 1.0 : 0.0), 1e-10));

    std::vector<double> central(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) {
      const double r = grid.point(i).r;
      central[i] = cfg.source_charge / std::sqrt(r * r + d * d);
    }
    const cplx u_central = experiment::inner_product(s0, s1, central, cfg.charge, grid, cfg.time).interaction;
    const double floor = std::max(rep.sweep.front().interaction.error, 1e-14);
    checks.push_back(at_most("orthogonality.central_potential", "a central potential leaves U at zero",
                             std::abs(u_central), floor));
  }
  return out;
}

}  // namespace densbench::checks
