#pragma once

#include <array>
#include <utility>

#include "hulthen/model.hpp"

namespace hulthen {

/// Coefficient triple of the hypergeometric-type reduction in the variable
/// s = e^{-delta r}.  All coefficient arrays are ordered constant-first.
struct NuPolynomials {
  std::array<double, 2> tau_tilde;    // 1 - s
  std::array<double, 3> sigma;        // s(1 - s)
  std::array<double, 3> sigma_tilde;  // -eps + (2 eps + beta) s - (eps+beta+gamma) s^2
};

/// The physically selected branch (k = k_minus, negative tau slope) of the
/// quantization machinery: pi(s) = pi_const + pi_slope * s and the lambda
/// eigenparameter.
struct NuBranch {
  double k;
  double pi_const;
  double pi_slope;
  double tau_slope;
  double lambda;
};

NuPolynomials nu_polynomials(const DimensionlessTriple& t);

/// Roots of the discriminant condition; returns {k_plus, k_minus} with
/// k_plus >= k_minus.  Requires epsilon >= 0.
std::pair<double, double> nu_k_roots(const DimensionlessTriple& t);

NuBranch nu_branch(const DimensionlessTriple& t);

double lambda_n(int n, const DimensionlessTriple& t);

/// Quantized epsilon_n = [(1+2n)/2 - (n(n+1)+beta)/(1+2n+sqrt(1+4 gamma))]^2.
/// A vanishing bracket (E = 0 threshold) raises ThresholdError.
double epsilon_n(int n, double beta, double gamma);

/// Closed-form bound-state energy; throws UnboundError (carrying delta_c)
/// when delta >= delta_c for the state.
double energy_general(const QuantumState& state, const PhysicalParams& p);

/// Same energy obtained through the epsilon_n quantization route; agrees
/// with energy_general to relative 1e-12.
double energy_via_epsilon(const QuantumState& state, const PhysicalParams& p);

/// Unchecked evaluation of the closed N-formula
/// E = -(hbar^2/2m) [ m Z e^2/(hbar^2 N) - N delta/2 ]^2.  Past threshold
/// this yields a spurious positive-bracket value; bound-state callers go
/// through energy_general instead.
double energy_formula(const QuantumState& state, const PhysicalParams& p);

/// Atomic-units convenience form E = -(1/2)[1/(nbar+l) - (nbar+l) delta/2]^2,
/// nbar >= 1.  Bound-checked like energy_general.
double energy_atomic(int nbar, int l, double delta);

/// Screening at which the level reaches E = 0: 2 m Z e^2/(hbar^2 N^2).
double critical_screening(const QuantumState& state, const PhysicalParams& p);

/// True iff delta < delta_c strictly (threshold itself counts as unbound).
bool is_bound(const QuantumState& state, const PhysicalParams& p);

/// Number of bound levels with angular momentum l.
int bound_state_count(int l, const PhysicalParams& p);

}  // namespace hulthen
