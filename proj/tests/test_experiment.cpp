#include "doctest.h"

#include <cmath>
#include <numbers>
#include <sstream>

#include "densbench/error.hpp"
#include "densbench/experiment.hpp"
#include "densbench/harmonics.hpp"
#include "oracle.hpp"

using namespace densbench;
using namespace densbench::experiment;

namespace {

struct Pair {
  num::BallGrid grid;
  KGState s0, s1;
};

Pair normalized_pair(double radius = 1.0, double mass = 1.0, num::GridSpec spec = {}) {
  const num::BallGrid grid(radius, spec);
  return {grid, normalize_kg_state(make_state(num::solve_well_mode(0, radius, mass), 0), grid),
          normalize_kg_state(make_state(num::solve_well_mode(1, radius, mass), 0), grid)};
}

}  // namespace

TEST_CASE("Coulomb potential of the external charge") {
  const ExternalCharge c{1.0, 2.0};
  for (double ct : {-1.0, 0.0, 0.4, 1.0}) CHECK(coulomb_potential(c, 0.0, ct) == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(coulomb_potential(c, 0.5, 0.0) == doctest::Approx(1.0 / std::sqrt(4.25)).epsilon(1e-15));
  CHECK(coulomb_potential(c, 0.5, 1.0) == doctest::Approx(2.0 / 3.0).epsilon(1e-15));
  // Nearer hemisphere sees the larger potential.
  for (double r : {0.1, 0.5, 0.99}) {
    for (double th : {0.1, 0.8, 1.5}) {
      CHECK(coulomb_potential(c, r, std::cos(th)) > coulomb_potential(c, r, std::cos(std::numbers::pi - th)));
    }
  }
  const num::BallGrid grid(1.0, {2, 4, 4, 2});
  CHECK_THROWS_AS(external_potential({1.0, 1.0}, grid), Error);
  CHECK_THROWS_AS(external_potential({1.0, 0.5}, grid), Error);
  CHECK(external_potential({1.0, 1.5}, grid).size() == grid.size());
}

TEST_CASE("normalization") {
  const num::BallGrid grid(1.0);
  const auto mode = num::solve_well_mode(0, 1.0, 1.0);
  const KGState s = normalize_kg_state(make_state(mode, 0), grid);
  CHECK(std::abs(std::abs(experiment::inner_product(s, s, {}, 1.0, grid).total) - 1.0) < 1e-12);

  const KGState again = normalize_kg_state(s, grid);
  CHECK(std::abs(again.norm - s.norm) < 1e-12 * std::abs(s.norm));

  num::RadialMode doubled = mode;
  doubled.scale = 2.0;
  const KGState s2 = normalize_kg_state(make_state(doubled, 0), grid);
  CHECK(std::abs(std::abs(s2.norm) - 0.5 * std::abs(s.norm)) < 1e-13);

  // Self integral checked on an independent, finer grid.
  const num::BallGrid fine(1.0, num::GridSpec{}.refined());
  CHECK(std::abs(std::abs(experiment::inner_product(s, s, {}, 1.0, fine).total) - 1.0) < 1e-10);

  num::RadialMode dead = mode;
  dead.scale = 0.0;
  try {
    normalize_kg_state(make_state(dead, 0), grid);
    FAIL("expected an exception");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::DegenerateState);
  }
}

TEST_CASE("the self inner product sign follows the phase convention") {
  const num::BallGrid grid(1.0);
  const auto mode = num::solve_well_mode(0, 1.0, 1.0);
  const KGState plus = normalize_kg_state(make_state(mode, 0, +1), grid);
  const KGState minus = normalize_kg_state(make_state(mode, 0, -1), grid);
  CHECK(std::abs(experiment::inner_product(plus, plus, {}, 0.0, grid).total + 1.0) < 1e-12);
  CHECK(std::abs(experiment::inner_product(minus, minus, {}, 0.0, grid).total - 1.0) < 1e-12);
}

TEST_CASE("free-space orthogonality of the s and p states") {
  const auto [grid, s0, s1] = normalized_pair();
  for (double t : {0.0, 0.37}) {
    CHECK(std::abs(experiment::inner_product(s0, s1, {}, 1.0, grid, t).total) < 1e-12);
  }
}

TEST_CASE("orthogonality at V = 0 holds for every distinct (l, m) pair up to l = 2") {
  const num::BallGrid grid(1.0, {8, 8, 16, 16});
  std::vector<KGState> states;
  for (int l = 0; l <= 2; ++l) {
    num::RadialMode mode;
    mode.l = l;
    mode.radius = 1.0;
    mode.mass = 1.0;
    mode.k = num::first_bessel_zero(l);
    mode.omega = std::hypot(mode.k, 1.0);
    for (int m = -l; m <= l; ++m) states.push_back(normalize_kg_state(make_state(mode, m), grid));
  }
  for (std::size_t a = 0; a < states.size(); ++a) {
    for (std::size_t b = 0; b < states.size(); ++b) {
      const double v = std::abs(experiment::inner_product(states[a], states[b], {}, 1.0, grid).total);
      CHECK(std::abs(v - (a == b ? 1.0 : 0.0)) < 1e-12);
    }
  }
}

TEST_CASE("the spatial product changes sign between mirror points") {
  const auto [grid, s0, s1] = normalized_pair();
  for (double r : {0.2, 0.6, 0.95}) {
    for (double th : {0.2, 0.9, 1.4}) {
      const num::BallGrid::Point p1{r, std::cos(th), th, 0.3, 0.0};
      const num::BallGrid::Point p2{r, std::cos(std::numbers::pi - th), std::numbers::pi - th, 0.3, 0.0};
      const double a = (std::conj(s0.value(p1)) * s1.value(p1)).real();
      const double b = (std::conj(s0.value(p2)) * s1.value(p2)).real();
      CHECK(a * b < 0.0);
    }
  }
}

TEST_CASE("interaction integral against the independent oracle") {
  const auto oracle = testing::oracle_modes(1.0, 1.0);
  const auto [grid, s0, s1] = normalized_pair();
  CHECK(std::abs(s0.omega - oracle.omega0) < 1e-12);
  CHECK(std::abs(s1.omega - oracle.omega1) < 1e-10);
  for (double d : {1.5, 2.0, 4.0}) {
    const auto v = external_potential({1.0, d}, grid);
    const cplx U = experiment::inner_product(s0, s1, v, 1.0, grid).interaction;
    const double reference = testing::oracle_interaction(oracle, 1.0, 1.0, d);
    CHECK(std::abs(U.imag()) < 1e-15);
    CHECK(std::abs(U.real() - reference) < 1e-6 * std::abs(reference));
    CHECK(std::abs(testing::brute_force_interaction(oracle, 1.0, 1.0, d) - reference) < 1e-9 * std::abs(reference));
  }
  // Frozen from the oracle: U(d = 2) for R = m = e = q = 1.
  CHECK(std::abs(testing::oracle_interaction(oracle, 1.0, 1.0, 2.0) - -0.0196390885868943) < 1e-12);
}

TEST_CASE("a central potential keeps the states orthogonal") {
  const auto [grid, s0, s1] = normalized_pair();
  std::vector<double> central(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double r = grid.point(i).r;
    central[i] = 1.0 / (0.3 + r * r) + std::exp(-r);
  }
  CHECK(std::abs(experiment::inner_product(s0, s1, central, 1.0, grid).interaction) < 1e-14);
  std::vector<double> constant(grid.size(), 0.5);
  CHECK(std::abs(experiment::inner_product(s0, s1, constant, 1.0, grid).interaction) < 1e-14);
}

TEST_CASE("orthogonality experiment defaults") {
  const ExperimentReport rep = run_orthogonality_experiment({});
  CHECK(std::abs(rep.overlap_free.value) < 1e-10);
  CHECK(std::abs(std::abs(rep.self0.value) - 1.0) < 1e-12);
  REQUIRE(rep.sweep.size() == 3);
  CHECK(rep.strictly_decreasing);
  for (const auto& p : rep.sweep) {
    CHECK(std::abs(p.interaction.value) > 10.0 * p.interaction.error);
    CHECK(std::abs(p.interaction_raw.value) > 0.0);
  }
  CHECK(std::abs(rep.sweep[0].interaction.value) > std::abs(rep.sweep[1].interaction.value));
  CHECK(std::abs(rep.sweep[1].interaction.value) > std::abs(rep.sweep[2].interaction.value));
  CHECK(std::abs(rep.k1 - 4.493409457909064) < 1e-10);
}

TEST_CASE("uncharged particle feels nothing") {
  ExperimentConfig cfg;
  cfg.charge = 0.0;
  const auto rep = run_orthogonality_experiment(cfg);
  for (const auto& p : rep.sweep) CHECK(p.interaction.value == cplx(0.0));
  CHECK(rep.monotone_nonincreasing);
}

TEST_CASE("far charge: only the dipole tail survives") {
  ExperimentConfig cfg;
  cfg.distances = {2.0, 1e4};
  const auto rep = run_orthogonality_experiment(cfg);
  const cplx near = rep.sweep[0].interaction.value;
  const cplx far = rep.sweep[1].interaction.value;
  CHECK(std::abs(far) < 1e-9);
  // U d^2 is independent of d: the monopole (constant) part drops out.
  CHECK(std::abs(far * 1e8 - near * 4.0) < 1e-9 * std::abs(near));
}

TEST_CASE("interaction is linear in both charges") {
  ExperimentConfig base;
  base.distances = {2.0};
  const cplx u = run_orthogonality_experiment(base).sweep[0].interaction.value;
  ExperimentConfig e2 = base;
  e2.charge = 2.0;
  ExperimentConfig q2 = base;
  q2.source_charge = 2.0;
  CHECK(std::abs(run_orthogonality_experiment(e2).sweep[0].interaction.value - 2.0 * u) < 1e-10 * std::abs(u));
  CHECK(std::abs(run_orthogonality_experiment(q2).sweep[0].interaction.value - 2.0 * u) < 1e-10 * std::abs(u));
}

TEST_CASE("experiment rejects a charge inside the well") {
  ExperimentConfig cfg;
  cfg.distances = {0.9};
  CHECK_THROWS_AS(run_orthogonality_experiment(cfg), Error);
}

TEST_CASE("report serialization is deterministic") {
  ExperimentConfig cfg;
  cfg.grid = {4, 8, 8, 4};
  const std::string a = to_json(run_orthogonality_experiment(cfg)).dump(2);
  const std::string b = to_json(run_orthogonality_experiment(cfg)).dump(2);
  CHECK(a == b);
  const auto j = nlohmann::json::parse(a);
  CHECK(j.contains("parameters"));
  CHECK(j.contains("convention"));
  CHECK(j["sweep"].size() == 3);

  std::ostringstream csv;
  write_csv(csv, run_orthogonality_experiment(cfg));
  CHECK(csv.str().rfind("d,re_U,im_U,error\n", 0) == 0);
}
