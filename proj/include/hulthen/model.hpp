#pragma once

#include "hulthen/errors.hpp"

namespace hulthen {

/// Physical constants of the screened-Coulomb problem.  Atomic units
/// (hbar = m = e^2 = 1) are the default construction path; the full
/// constructor keeps the general-units formulas testable.
struct PhysicalParams {
  double delta;       // screening parameter, 1/length
  double Z = 1.0;     // atomic number
  double mass = 1.0;
  double hbar = 1.0;
  double charge_sq = 1.0;  // e^2

  PhysicalParams(double delta_, double Z_ = 1.0, double mass_ = 1.0,
                 double hbar_ = 1.0, double charge_sq_ = 1.0);

  static PhysicalParams atomic(double delta, double Z = 1.0) {
    return PhysicalParams(delta, Z);
  }
};

/// Radial quantum number n >= 0 (node count) and angular momentum l >= 0.
struct QuantumState {
  int n;
  int l;

  QuantumState(int n_, int l_);

  int nbar() const noexcept { return n + 1; }
  int principal() const noexcept { return n + l + 1; }  // N = n + l + 1
};

/// Strength of the attractive term (v1, may go non-positive for large
/// l*delta) and of the screened barrier term (v2 >= 0).
struct CouplingPair {
  double v1;
  double v2;
};

/// Dimensionless working variables of the closed-form solver:
/// epsilon = -2mE/(hbar^2 delta^2), beta = 2m v1/(hbar^2 delta^2),
/// gamma = 2m v2/(hbar^2 delta^2) = l(l+1).
struct DimensionlessTriple {
  double epsilon;
  double beta;
  double gamma;
};

double potential_hulthen(const PhysicalParams& p, double r);
double potential_superpartner(const PhysicalParams& p, int l, double r);
double potential_effective(const PhysicalParams& p, int l, double r);
double potential_coulomb_effective(const PhysicalParams& p, int l, double r);

CouplingPair couplings(const PhysicalParams& p, int l);
DimensionlessTriple dimensionless(const PhysicalParams& p, int l, double energy);

}  // namespace hulthen
