#pragma once

#include <vector>

#include "hulthen/jacobi.hpp"
#include "hulthen/model.hpp"
#include "hulthen/nu.hpp"

namespace hulthen {

/// Exponents and degree defining the radial solution in the s = e^{-delta r}
/// variable: R(s) = s^{sqrt_epsilon} (1-s)^{mu} P_n^{(2 sqrt_epsilon, eta-1)}(1-2s)
/// with eta = 1 + sqrt(1 + 4 gamma) and mu = eta/2.
struct WaveShape {
  double sqrt_epsilon;
  double eta;
  double mu;
  int n;

  /// Shape of the bound state under p; throws UnboundError otherwise.
  static WaveShape for_state(const QuantumState& state, const PhysicalParams& p);
};

/// Weight function (1-s)^{eta-1} s^{2 sqrt_epsilon} on s in (0, 1).
double weight_rho(const WaveShape& shape, double s);

/// phi factor (1-s)^{mu} s^{sqrt_epsilon} on s in (0, 1).
double phi_factor(const WaveShape& shape, double s);

/// Unnormalized radial solution at s in (0, 1).
double radial_unnormalized(const QuantumState& state, const PhysicalParams& p, double s);

/// Normalization constant D_n with integral of (D_n R)^2 dr equal to 1,
/// by adaptive quadrature (relative error <= 1e-10).
double normalize(const QuantumState& state, const PhysicalParams& p);

struct RadialWavefunction {
  std::vector<double> r_grid;
  std::vector<double> values;
  double norm_const;
  int node_count;
  QuantumState state;
  double delta;
};

/// r_max resolving both the e^{-kappa r} and the s-variable tails:
/// max(30/kappa, 5 ln(10)/delta).
double default_r_max(const QuantumState& state, const PhysicalParams& p);

/// Normalized samples on a uniform r-grid of `count` points over [0, r_max].
RadialWavefunction sample(const QuantumState& state, const PhysicalParams& p,
                          double r_max, int count);
RadialWavefunction sample(const QuantumState& state, const PhysicalParams& p);

/// Trapezoidal integral of R1 * R2 over the (identical) grids.
double inner_product(const RadialWavefunction& w1, const RadialWavefunction& w2);

}  // namespace hulthen
