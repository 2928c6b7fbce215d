#pragma once

#include <functional>
#include <vector>

#include "hulthen/model.hpp"

namespace hulthen {

/// Grid and convergence settings for the shooting solver.  r_max = 0 lets
/// the eigenvalue drivers pick a domain from the seed energy; steps acts as
/// a floor (the drivers raise it to keep the step size small enough).
struct ShootingConfig {
  double r_min = 1e-6;
  double r_max = 0.0;
  int steps = 20000;
  double energy_tol = 1e-11;
  int max_bisections = 200;
  double mass = 1.0;
  double hbar = 1.0;
  /// Coefficient c1 of the small-r series u ~ r^{l+1} (1 + c1 r), used to
  /// seed the outward start.  For a Coulomb-like -q/r potential,
  /// c1 = -m q / (hbar^2 (l+1)).
  double series_slope = 0.0;
};

/// One two-sided Numerov integration at fixed energy.  The potential must be
/// the full radial potential (centrifugal term included by the caller when
/// it applies); l only shapes the r -> 0 boundary behaviour.
struct IntegrationResult {
  std::vector<double> outward;  // u on the full grid, integrated from r_min
  std::vector<double> inward;   // u on the full grid, integrated from r_max
  double match_defect;          // log-derivative mismatch at the turning point
  int node_count;               // sign changes of the outward solution
  int match_index;
  double step;
};

IntegrationResult integrate_numerov(const std::function<double(double)>& potential,
                                    int l, double energy, const ShootingConfig& cfg);

struct OracleResult {
  double energy;
  int node_count;
  double match_defect;
  bool converged;
};

/// Eigenvalue with node count n for an arbitrary radial potential, by
/// node-count bracketing around seed_energy followed by bisection.
OracleResult solve_eigenvalue(const std::function<double(double)>& potential,
                              int l, int n, double seed_energy, ShootingConfig cfg);

/// Eigenvalue of the screened effective potential; the closed form is exact
/// here, so the result must agree with energy_general to ~1e-8.
OracleResult oracle_energy_effective(const QuantumState& state, const PhysicalParams& p,
                                     ShootingConfig cfg = {});

/// Eigenvalue of the original potential with the true centrifugal barrier
/// l(l+1) hbar^2/(2 m r^2).
OracleResult oracle_energy_hulthen(const QuantumState& state, const PhysicalParams& p,
                                   ShootingConfig cfg = {});

}  // namespace hulthen
