#include "densbench/experiment.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>

#include <fmt/format.h>

#include "densbench/error.hpp"
#include "densbench/harmonics.hpp"

namespace densbench::experiment {

namespace {

constexpr cplx kI{0.0, 1.0};

nlohmann::ordered_json complex_json(const cplx& z) { return {{"re", z.real()}, {"im", z.imag()}}; }

nlohmann::ordered_json estimate_json(const Estimate& e) {
  return {{"value", complex_json(e.value)}, {"abs", std::abs(e.value)}, {"error", e.error}};
}

Estimate refine(const cplx& coarse, const cplx& fine) { return {fine, std::abs(fine - coarse)}; }

}  // namespace

cplx KGState::value(const num::BallGrid::Point& p, double t) const {
  return norm * std::exp(kI * (sigma * omega * t)) * radial(p.r) * num::spherical_harmonic(l, m, p.theta, p.phi);
}

cplx KGState::time_derivative(const num::BallGrid::Point& p, double t) const {
  return kI * static_cast<double>(sigma) * omega * value(p, t);
}

KGState make_state(const num::RadialMode& radial, int m, int sigma) {
  if (std::abs(m) > radial.l) throw Error(ErrorKind::InvalidArgument, "|m| exceeds l");
  if (sigma != 1 && sigma != -1) throw Error(ErrorKind::InvalidArgument, "phase convention must be +1 or -1");
  KGState s;
  s.sigma = sigma;
  s.omega = radial.omega;
  s.l = radial.l;
  s.m = m;
  s.radial = radial;
  return s;
}

double coulomb_potential(const ExternalCharge& charge, double r, double cos_theta) {
  return charge.q / std::sqrt(r * r + charge.d * charge.d - 2.0 * r * charge.d * cos_theta);
}

std::vector<double> external_potential(const ExternalCharge& charge, const num::BallGrid& grid) {
  if (!(charge.d > grid.radius())) {
    throw Error(ErrorKind::InvalidConfiguration,
                fmt::format("external charge at d={} must lie outside the ball R={}", charge.d, grid.radius()));
  }
  std::vector<double> v(grid.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    const auto p = grid.point(i);
    v[i] = coulomb_potential(charge, p.r, p.cos_theta);
  }
  return v;
}

InnerProduct inner_product(const KGState& a, const KGState& b, std::span<const double> potential, double charge,
                           const num::BallGrid& grid, double t) {
  if (!potential.empty() && potential.size() != grid.size()) {
    throw Error(ErrorKind::InvalidArgument, "potential does not match the grid");
  }
  std::vector<cplx> current(grid.size());
  std::vector<cplx> interaction(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const auto p = grid.point(i);
    const cplx fa = std::conj(a.value(p, t));
    const cplx fb = b.value(p, t);
    current[i] = kI * (fa * b.time_derivative(p, t) - std::conj(a.time_derivative(p, t)) * fb);
    const double v = potential.empty() ? 0.0 : potential[i];
    interaction[i] = -2.0 * charge * v * fa * fb;
  }
  InnerProduct out;
  out.current_part = num::integrate_ball(current, grid);
  out.interaction = num::integrate_ball(interaction, grid);
  out.total = out.current_part + out.interaction;
  return out;
}

KGState normalize_kg_state(const KGState& state, const num::BallGrid& grid) {
  const double self = std::abs(inner_product(state, state, {}, 0.0, grid).total);
  if (!(self > 0.0) || !std::isfinite(self)) {
    throw Error(ErrorKind::DegenerateState, "state has zero self inner product");
  }
  KGState out = state;
  out.norm = state.norm / std::sqrt(self);
  return out;
}

namespace {

struct GridPass {
  cplx overlap_free;
  cplx self0;
  cplx self1;
  std::vector<cplx> interaction;
  std::vector<cplx> interaction_raw;
};

GridPass run_on_grid(const ExperimentConfig& cfg, const num::GridSpec& spec, const KGState& raw0,
                     const KGState& raw1) {
  const num::BallGrid grid(cfg.radius, spec);
  const KGState s0 = normalize_kg_state(raw0, grid);
  const KGState s1 = normalize_kg_state(raw1, grid);
  GridPass out;
  out.overlap_free = experiment::inner_product(s0, s1, {}, cfg.charge, grid, cfg.time).total;
  out.self0 = experiment::inner_product(s0, s0, {}, cfg.charge, grid, cfg.time).total;
  out.self1 = experiment::inner_product(s1, s1, {}, cfg.charge, grid, cfg.time).total;
  for (double d : cfg.distances) {
    const auto v = external_potential({cfg.source_charge, d}, grid);
    out.interaction.push_back(experiment::inner_product(s0, s1, v, cfg.charge, grid, cfg.time).interaction);
    out.interaction_raw.push_back(experiment::inner_product(raw0, raw1, v, cfg.charge, grid, cfg.time).interaction);
  }
  return out;
}

}  // namespace

ExperimentReport run_orthogonality_experiment(const ExperimentConfig& config) {
  if (!(config.radius > 0.0)) throw Error(ErrorKind::InvalidConfiguration, "radius must be positive");
  for (double d : config.distances) {
    if (!(d > config.radius)) {
      throw Error(ErrorKind::InvalidConfiguration,
                  fmt::format("external charge at d={} must lie outside the ball R={}", d, config.radius));
    }
  }
  const auto mode0 = num::solve_well_mode(0, config.radius, config.mass);
  const auto mode1 = num::solve_well_mode(1, config.radius, config.mass);
  const KGState raw0 = make_state(mode0, 0, config.sigma);
  const KGState raw1 = make_state(mode1, 0, config.sigma);

  ExperimentReport report;
  report.config = config;
  report.fine_grid = config.grid.refined();
  report.k0 = mode0.k;
  report.k1 = mode1.k;
  report.omega0 = mode0.omega;
  report.omega1 = mode1.omega;

  const GridPass coarse = run_on_grid(config, config.grid, raw0, raw1);
  const GridPass fine = run_on_grid(config, report.fine_grid, raw0, raw1);
  report.overlap_free = refine(coarse.overlap_free, fine.overlap_free);
  report.self0 = refine(coarse.self0, fine.self0);
  report.self1 = refine(coarse.self1, fine.self1);
  for (std::size_t i = 0; i < config.distances.size(); ++i) {
    report.sweep.push_back({config.distances[i], refine(coarse.interaction[i], fine.interaction[i]),
                            refine(coarse.interaction_raw[i], fine.interaction_raw[i])});
  }

  std::vector<SweepPoint> by_distance = report.sweep;
  std::sort(by_distance.begin(), by_distance.end(),
            [](const SweepPoint& a, const SweepPoint& b) { return a.distance < b.distance; });
  for (std::size_t i = 1; i < by_distance.size(); ++i) {
    const double nearer = std::abs(by_distance[i - 1].interaction.value);
    const double farther = std::abs(by_distance[i].interaction.value);
    if (farther > nearer) report.monotone_nonincreasing = false;
    if (!(farther < nearer)) report.strictly_decreasing = false;
  }

  report.convention = fmt::format(
      "states carry exp({}i omega t); with the density i(phi* phi_0 - phi*_0 phi) the self inner product "
      "of a normalized state is {} at V=0",
      config.sigma > 0 ? "+" : "-", config.sigma > 0 ? "-1" : "+1");
  report.approximation =
      "quasi-static snapshot: Coulomb potential of a fixed charge on +z, vector potential neglected (A=0)";
  return report;
}

nlohmann::ordered_json to_json(const ExperimentReport& report) {
  const auto& c = report.config;
  auto grid_json = [](const num::GridSpec& g) {
    return nlohmann::ordered_json{{"radial_panels", g.radial_panels},
                                  {"radial_order", g.radial_order},
                                  {"polar_order", g.polar_order},
                                  {"azimuthal_count", g.azimuthal_count}};
  };
  nlohmann::ordered_json j;
  j["parameters"] = {{"R", c.radius},
                     {"m", c.mass},
                     {"e", c.charge},
                     {"q", c.source_charge},
                     {"d", c.distances},
                     {"t", c.time},
                     {"sigma", c.sigma},
                     {"grid", grid_json(c.grid)},
                     {"fine_grid", grid_json(report.fine_grid)}};
  j["convention"] = {{"phase", c.sigma > 0 ? "exp(+i omega t)" : "exp(-i omega t)"},
                     {"description", report.convention},
                     {"approximation", report.approximation}};
  j["modes"] = {{"k0", report.k0}, {"k1", report.k1}, {"omega0", report.omega0}, {"omega1", report.omega1}};
  j["overlap_free"] = estimate_json(report.overlap_free);
  j["self0"] = estimate_json(report.self0);
  j["self1"] = estimate_json(report.self1);
  auto sweep = nlohmann::ordered_json::array();
  for (const auto& p : report.sweep) {
    sweep.push_back({{"d", p.distance},
                     {"U", estimate_json(p.interaction)},
                     {"U_raw", estimate_json(p.interaction_raw)}});
  }
  j["sweep"] = std::move(sweep);
  j["monotone_nonincreasing"] = report.monotone_nonincreasing;
  j["strictly_decreasing"] = report.strictly_decreasing;
  return j;
}

void write_csv(std::ostream& os, const ExperimentReport& report) {
  os << "d,re_U,im_U,error\n";
  for (const auto& p : report.sweep) {
    os << fmt::format("{:.17g},{:.17g},{:.17g},{:.17g}\n", p.distance, p.interaction.value.real(),
                      p.interaction.value.imag(), p.interaction.error);
  }
}

}  // namespace densbench::experiment
