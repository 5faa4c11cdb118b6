#pragma once

// Two lowest well modes phi_0 ~ f_0(r) Y_00 and phi_1 ~ f_1(r) Y_10 of a
// charged KG particle, and what happens to their inner product (built from
// the KG charge density) when a static point charge sits on the +z axis.

#include <complex>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "json.hpp"

#include "densbench/quadrature.hpp"
#include "densbench/well.hpp"

namespace densbench::experiment {

using cplx = std::complex<double>;

/// norm * e^{i sigma omega t} f(r) Y_lm(theta, phi)
struct KGState {
  int sigma = +1;
  double omega = 0.0;
  int l = 0;
  int m = 0;
  num::RadialMode radial;
  cplx norm{1.0, 0.0};

  cplx value(const num::BallGrid::Point& p, double t = 0.0) const;
  cplx time_derivative(const num::BallGrid::Point& p, double t = 0.0) const;
};

KGState make_state(const num::RadialMode& radial, int m, int sigma = +1);

struct ExternalCharge {
  double q = 1.0;
  double d = 2.0;  // distance along +z, must exceed the well radius
};

/// q / sqrt(r^2 + d^2 - 2 r d cos(theta))
double coulomb_potential(const ExternalCharge& charge, double r, double cos_theta);
std::vector<double> external_potential(const ExternalCharge& charge, const num::BallGrid& grid);

struct InnerProduct {
  cplx total;
  cplx current_part;  // i(phi_a* phi_b,0 - phi_a,0* phi_b)
  cplx interaction;   // -2 e V phi_a* phi_b, the U integral
};

/// Integral of the cross density between `a` and `b` over the ball at time
/// `t`. An empty `potential` means V = 0.
InnerProduct inner_product(const KGState& a, const KGState& b, std::span<const double> potential, double charge,
                           const num::BallGrid& grid, double t = 0.0);

/// Rescales `norm` so that |<state, state>| = 1 at V = 0.
KGState normalize_kg_state(const KGState& state, const num::BallGrid& grid);

struct ExperimentConfig {
  double radius = 1.0;
  double mass = 1.0;
  double charge = 1.0;         // e, the KG particle's coupling
  double source_charge = 1.0;  // q, the external charge
  std::vector<double> distances{1.5, 2.0, 4.0};
  num::GridSpec grid;
  int sigma = +1;
  double time = 0.0;
};

/// Value from the finer of two grids; `error` is |fine - coarse|.
struct Estimate {
  cplx value;
  double error = 0.0;
};

struct SweepPoint {
  double distance;
  Estimate interaction;      // U between normalized states
  Estimate interaction_raw;  // U between the bare j_l(k r) modes
};

struct ExperimentReport {
  ExperimentConfig config;
  num::GridSpec fine_grid;
  double k0 = 0.0;
  double k1 = 0.0;
  double omega0 = 0.0;
  double omega1 = 0.0;
  Estimate overlap_free;  // I_01 at V = 0, normalized states
  Estimate self0;
  Estimate self1;
  std::vector<SweepPoint> sweep;
  bool monotone_nonincreasing = true;  // |U| never grows with d
  bool strictly_decreasing = true;
  std::string convention;
  std::string approximation;
};

ExperimentReport run_orthogonality_experiment(const ExperimentConfig& config);

nlohmann::ordered_json to_json(const ExperimentReport& report);
/// d,re_U,im_U,error
void write_csv(std::ostream& os, const ExperimentReport& report);

}  // namespace densbench::experiment
