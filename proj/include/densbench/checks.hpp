#pragma once

// The claim matrix: every verification the command-line front end and the
// acceptance suite report on, grouped the way the subcommands are.

#include <cstddef>
#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "densbench/experiment.hpp"

namespace densbench::checks {

struct Check {
  std::string name;    // stable identifier, e.g. "dim.dirac_field"
  std::string claim;   // one-line statement being verified
  bool passed = false;
  std::string detail;  // measured outcome in words
  double value = std::numeric_limits<double>::quiet_NaN();
  double tolerance = std::numeric_limits<double>::quiet_NaN();
};

struct Settings {
  std::size_t lattice_points = 9;  // coarsest lattice, points per axis; refined as 2n-1, 4n-3
  experiment::ExperimentConfig experiment;
  std::uint32_t seed = 2024;
  std::size_t samples = 10000;
};

std::vector<Check> dimension_checks();
/// Euler-Lagrange and Legendre steps against the hand-expanded forms.
std::vector<Check> derivation_checks();
std::vector<Check> symmetry_checks();
std::vector<Check> continuity_checks(const Settings& s);
std::vector<Check> dirac_consistency_checks(const Settings& s);
/// Sign of the Dirac and KG densities and of the KG energy density on random samples.
std::vector<Check> positivity_checks(const Settings& s);
/// Quadrature, harmonics and well solver sanity.
std::vector<Check> numerics_checks(const Settings& s);

struct OrthogonalityOutcome {
  experiment::ExperimentReport report;
  std::vector<Check> checks;
};
OrthogonalityOutcome orthogonality_checks(const Settings& s);

bool all_passed(const std::vector<Check>& checks);

}  // namespace densbench::checks
