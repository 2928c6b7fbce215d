#include "hulthen/model.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace hulthen {

namespace {

void require_positive_r(double r) {
  if (!(r > 0.0)) {
    throw std::domain_error("potential requires r > 0, got r = " + std::to_string(r));
  }
}

void require_nonnegative_l(int l) {
  if (l < 0) {
    throw std::domain_error("angular momentum l must be >= 0, got l = " + std::to_string(l));
  }
}

// e^{-delta r} and 1 - e^{-delta r}; the latter via expm1 so the small-r
// region keeps full relative precision.
struct Screened {
  double x;    // e^{-delta r}
  double omx;  // 1 - e^{-delta r}
};

Screened screened(double delta, double r) {
  return {std::exp(-delta * r), -std::expm1(-delta * r)};
}

}  // namespace

PhysicalParams::PhysicalParams(double delta_, double Z_, double mass_,
                               double hbar_, double charge_sq_)
    : delta(delta_), Z(Z_), mass(mass_), hbar(hbar_), charge_sq(charge_sq_) {
  if (!(mass > 0.0) || !(hbar > 0.0) || !(charge_sq > 0.0) || !(Z > 0.0) ||
      !(delta > 0.0)) {
    throw std::invalid_argument("PhysicalParams: mass, hbar, e^2, Z and delta must all be positive");
  }
}

QuantumState::QuantumState(int n_, int l_) : n(n_), l(l_) {
  if (n < 0 || l < 0) {
    throw std::invalid_argument("QuantumState: n and l must be non-negative");
  }
}

double potential_hulthen(const PhysicalParams& p, double r) {
  require_positive_r(r);
  auto [x, omx] = screened(p.delta, r);
  return -p.Z * p.charge_sq * p.delta * x / omx;
}

double potential_superpartner(const PhysicalParams& p, int l, double r) {
  require_positive_r(r);
  require_nonnegative_l(l);
  auto [x, omx] = screened(p.delta, r);
  const auto [v1, v2] = couplings(p, l);
  return -v1 * x / omx + v2 * (x / omx) * (x / omx);
}

double potential_effective(const PhysicalParams& p, int l, double r) {
  require_positive_r(r);
  require_nonnegative_l(l);
  auto [x, omx] = screened(p.delta, r);
  const double ll1 = static_cast<double>(l) * (l + 1);
  const double barrier = ll1 * p.hbar * p.hbar * p.delta * p.delta / (2.0 * p.mass);
  return -p.Z * p.charge_sq * p.delta * x / omx + barrier * x / (omx * omx);
}

double potential_coulomb_effective(const PhysicalParams& p, int l, double r) {
  require_positive_r(r);
  require_nonnegative_l(l);
  const double ll1 = static_cast<double>(l) * (l + 1);
  return -p.Z * p.charge_sq / r + ll1 * p.hbar * p.hbar / (2.0 * p.mass * r * r);
}

CouplingPair couplings(const PhysicalParams& p, int l) {
  require_nonnegative_l(l);
  const double ll1 = static_cast<double>(l) * (l + 1);
  const double hbar2 = p.hbar * p.hbar;
  const double v1 = p.Z * p.charge_sq * p.delta *
                    (1.0 - ll1 * hbar2 * p.delta / (2.0 * p.mass * p.Z * p.charge_sq));
  const double v2 = hbar2 * p.delta * p.delta * ll1 / (2.0 * p.mass);
  return {v1, v2};
}

DimensionlessTriple dimensionless(const PhysicalParams& p, int l, double energy) {
  require_nonnegative_l(l);
  const double scale = 2.0 * p.mass / (p.hbar * p.hbar * p.delta * p.delta);
  const double v1 = couplings(p, l).v1;
  // gamma = l(l+1) as an exact integer identity, not through v2.
  return {-scale * energy, scale * v1, static_cast<double>(l) * (l + 1)};
}

}  // namespace hulthen
