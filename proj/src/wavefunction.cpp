#include "hulthen/wavefunction.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "quadrature.hpp"

namespace hulthen {

namespace {

void require_open_unit(double s) {
  if (!(s > 0.0 && s < 1.0)) {
    throw std::domain_error("s must lie in the open interval (0, 1)");
  }
}

// R evaluated through r so that 1 - s = -expm1(-delta r) keeps precision at
// small r and s^{sqrt_eps} = exp(-delta sqrt_eps r) cannot lose the exponent.
double radial_from_r(const WaveShape& shape, double delta, double r) {
  if (r <= 0.0) return 0.0;
  const double oms = -std::expm1(-delta * r);  // 1 - s
  const double s = std::exp(-delta * r);
  const double envelope =
      std::exp(-delta * shape.sqrt_epsilon * r) * std::pow(oms, shape.mu);
  return envelope * jacobi(shape.n, 2.0 * shape.sqrt_epsilon, shape.eta - 1.0, 1.0 - 2.0 * s);
}

// Decay rate of the outer tail, kappa = sqrt(2m|E|)/hbar = delta sqrt_eps.
double tail_kappa(const WaveShape& shape, const PhysicalParams& p) {
  return p.delta * shape.sqrt_epsilon;
}

}  // namespace

WaveShape WaveShape::for_state(const QuantumState& state, const PhysicalParams& p) {
  const double energy = energy_general(state, p);  // throws if unbound
  const DimensionlessTriple t = dimensionless(p, state.l, energy);
  WaveShape shape;
  shape.sqrt_epsilon = std::sqrt(t.epsilon);
  shape.eta = 1.0 + std::sqrt(1.0 + 4.0 * t.gamma);
  shape.mu = shape.eta / 2.0;
  shape.n = state.n;
  return shape;
}

double weight_rho(const WaveShape& shape, double s) {
  require_open_unit(s);
  return std::pow(1.0 - s, shape.eta - 1.0) * std::pow(s, 2.0 * shape.sqrt_epsilon);
}

double phi_factor(const WaveShape& shape, double s) {
  require_open_unit(s);
  return std::pow(1.0 - s, shape.mu) * std::pow(s, shape.sqrt_epsilon);
}

double radial_unnormalized(const QuantumState& state, const PhysicalParams& p, double s) {
  require_open_unit(s);
  const WaveShape shape = WaveShape::for_state(state, p);
  return phi_factor(shape, s) *
         jacobi(shape.n, 2.0 * shape.sqrt_epsilon, shape.eta - 1.0, 1.0 - 2.0 * s);
}

double normalize(const QuantumState& state, const PhysicalParams& p) {
  const WaveShape shape = WaveShape::for_state(state, p);
  const double kappa = tail_kappa(shape, p);
  const double r_up = (45.0 + 10.0 * state.n) / kappa;
  const auto integrand = [&](double r) {
    const double v = radial_from_r(shape, p.delta, r);
    return v * v;
  };
  const double integral = detail::adaptive_quadrature(integrand, 0.0, r_up, 1e-11);
  if (!(integral > 0.0) || !std::isfinite(integral)) {
    throw NumericalError("normalization integral is not positive and finite");
  }
  return 1.0 / std::sqrt(integral);
}

double default_r_max(const QuantumState& state, const PhysicalParams& p) {
  const WaveShape shape = WaveShape::for_state(state, p);
  const double kappa = tail_kappa(shape, p);
  return std::max(30.0 / kappa, 5.0 * std::log(10.0) / p.delta);
}

RadialWavefunction sample(const QuantumState& state, const PhysicalParams& p,
                          double r_max, int count) {
  if (!(r_max > 0.0)) {
    throw std::domain_error("sample requires r_max > 0");
  }
  if (count < 2) {
    throw std::domain_error("sample requires count >= 2");
  }
  const WaveShape shape = WaveShape::for_state(state, p);
  const double dn = normalize(state, p);

  RadialWavefunction w{{}, {}, dn, 0, state, p.delta};
  w.r_grid.resize(count);
  w.values.resize(count);
  const double h = r_max / (count - 1);
  for (int i = 0; i < count; ++i) {
    w.r_grid[i] = i * h;
    w.values[i] = dn * radial_from_r(shape, p.delta, w.r_grid[i]);
  }

  // Strict sign changes, skipping the outer 0.1% of the grid on both ends.
  const int skip = std::max(1, count / 1000);
  int nodes = 0;
  for (int i = skip; i + 1 < count - skip; ++i) {
    if (w.values[i] != 0.0 && w.values[i + 1] != 0.0 &&
        std::signbit(w.values[i]) != std::signbit(w.values[i + 1])) {
      ++nodes;
    }
  }
  w.node_count = nodes;
  return w;
}

RadialWavefunction sample(const QuantumState& state, const PhysicalParams& p) {
  return sample(state, p, default_r_max(state, p), 4001);
}

double inner_product(const RadialWavefunction& w1, const RadialWavefunction& w2) {
  if (w1.r_grid != w2.r_grid) {
    throw std::domain_error("inner_product requires identical r grids");
  }
  double acc = 0.0;
  for (std::size_t i = 0; i + 1 < w1.r_grid.size(); ++i) {
    const double h = w1.r_grid[i + 1] - w1.r_grid[i];
    acc += 0.5 * h * (w1.values[i] * w2.values[i] + w1.values[i + 1] * w2.values[i + 1]);
  }
  return acc;
}

}  // namespace hulthen
