#include <doctest.h>

#include <cmath>
#include <functional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "hulthen/wavefunction.hpp"

using namespace hulthen;

namespace {

double radial_at_r(const QuantumState& state, const PhysicalParams& p, double r) {
  if (r <= 0.0) return 0.0;
  return radial_unnormalized(state, p, std::exp(-p.delta * r));
}

// Test-only composite Simpson oracle, independent of the library quadrature.
double simpson(const std::function<double(double)>& f, double a, double b, int intervals) {
  if (intervals % 2 != 0) ++intervals;
  const double h = (b - a) / intervals;
  double acc = f(a) + f(b);
  for (int i = 1; i < intervals; ++i) {
    acc += f(a + i * h) * (i % 2 == 1 ? 4.0 : 2.0);
  }
  return acc * h / 3.0;
}

}  // namespace

TEST_CASE("wave shape exponents") {
  const WaveShape shape = WaveShape::for_state(QuantumState(0, 0), PhysicalParams::atomic(0.05));
  CHECK(shape.sqrt_epsilon == doctest::Approx(19.5).epsilon(1e-13));
  CHECK(shape.eta == doctest::Approx(2.0));
  CHECK(shape.mu == doctest::Approx(1.0));
  for (int l = 0; l <= 3; ++l) {
    const WaveShape s = WaveShape::for_state(QuantumState(0, l), PhysicalParams::atomic(0.01));
    CHECK(s.eta == doctest::Approx(2.0 * l + 2.0));
    CHECK(s.mu == doctest::Approx(l + 1.0));
  }
  CHECK_THROWS_AS(WaveShape::for_state(QuantumState(3, 0), PhysicalParams::atomic(0.2)),
                  UnboundError);
}

TEST_CASE("weight function") {
  WaveShape shape{0.4995, 2.0, 1.0, 0};
  CHECK(std::abs(weight_rho(shape, 0.5) - 0.2501734) < 1e-6);
  CHECK(weight_rho(shape, 1.0 - 1e-12) < 1e-11);
  CHECK(weight_rho(shape, 1e-14) < 1e-6);
  CHECK_THROWS_AS(weight_rho(shape, 0.0), std::domain_error);
  CHECK_THROWS_AS(weight_rho(shape, 1.0), std::domain_error);
}

TEST_CASE("phi factor") {
  WaveShape unit{1.0, 2.0, 1.0, 0};
  CHECK(phi_factor(unit, 0.5) == doctest::Approx(0.25));
  WaveShape p_state{0.3, 4.0, 2.0, 0};
  CHECK(std::abs(phi_factor(p_state, 0.5) - 0.2030631) < 1e-6);
  CHECK(phi_factor(unit, 1e-14) < 1e-13);
  CHECK_THROWS_AS(phi_factor(unit, -0.1), std::domain_error);
}

TEST_CASE("weight function satisfies (sigma rho)' = tau rho") {
  for (int l : {0, 1}) {
    const WaveShape shape =
        WaveShape::for_state(QuantumState(0, l), PhysicalParams::atomic(0.05));
    const double nu = 2.0 * shape.sqrt_epsilon;
    auto sigma_rho = [&](double s) { return s * (1.0 - s) * weight_rho(shape, s); };
    auto tau = [&](double s) { return (nu + 1.0) - (nu + 1.0 + shape.eta) * s; };
    for (double s = 0.05; s <= 0.9501; s += 0.05) {
      // rho varies like s^nu with nu ~ 39; the stencil width must stay well
      // below the local variation scale s/nu, uniformly in s.
      const double h = s / 2000.0;
      const double lhs = (sigma_rho(s - 2 * h) - 8.0 * sigma_rho(s - h) +
                          8.0 * sigma_rho(s + h) - sigma_rho(s + 2 * h)) /
                         (12.0 * h);
      const double rhs = tau(s) * weight_rho(shape, s);
      // tau crosses zero inside (0,1); floor the comparison scale with the
      // natural magnitude |tau'| * rho so the relative test stays meaningful
      // near that root.
      const double floor = (nu + 1.0 + shape.eta) * weight_rho(shape, s);
      CHECK(std::abs(lhs - rhs) <= 1e-8 * std::max({std::abs(lhs), std::abs(rhs), floor, 1e-30}));
    }
  }
}

TEST_CASE("unnormalized radial solution") {
  const QuantumState ground(0, 0);
  const PhysicalParams p = PhysicalParams::atomic(0.05);
  CHECK(radial_unnormalized(ground, p, 0.5) ==
        doctest::Approx(std::pow(0.5, 20.5)).epsilon(1e-12));
  // boundary decay
  CHECK(std::abs(radial_unnormalized(ground, p, 1e-10)) < 1e-100);
  CHECK(std::abs(radial_unnormalized(ground, p, 1.0 - 1e-12)) < 1e-10);
  CHECK_THROWS_AS(radial_unnormalized(QuantumState(3, 0), PhysicalParams::atomic(0.2), 0.5),
                  UnboundError);
}

TEST_CASE("two sign changes for n=2") {
  const QuantumState state(2, 0);
  const PhysicalParams p = PhysicalParams::atomic(0.05);
  int flips = 0;
  double prev = radial_unnormalized(state, p, 0.999);
  for (double s = 0.998; s > 0.001; s -= 0.001) {
    const double v = radial_unnormalized(state, p, s);
    if (v != 0.0 && prev != 0.0 && std::signbit(v) != std::signbit(prev)) ++flips;
    if (v != 0.0) prev = v;
  }
  CHECK(flips == 2);
}

TEST_CASE("normalization constant against an independent Simpson oracle") {
  for (auto [n, l] : std::vector<std::pair<int, int>>{{0, 0}, {1, 0}, {0, 1}, {2, 1}}) {
    const QuantumState state(n, l);
    const PhysicalParams p = PhysicalParams::atomic(0.05);
    const double dn = normalize(state, p);
    CHECK(dn > 0.0);
    const WaveShape shape = WaveShape::for_state(state, p);
    const double kappa = p.delta * shape.sqrt_epsilon;
    auto integrand = [&](double r) {
      const double v = dn * radial_at_r(state, p, r);
      return v * v;
    };
    const double norm = simpson(integrand, 0.0, 50.0 / kappa + 10.0 * n, 200000);
    CHECK(std::abs(norm - 1.0) <= 1e-8);
  }
}

TEST_CASE("small-delta limit approaches the hydrogen ground state") {
  const QuantumState state(0, 0);
  const PhysicalParams p = PhysicalParams::atomic(1e-3);
  const double dn = normalize(state, p);
  auto diff_sq = [&](double r) {
    const double rh = 2.0 * r * std::exp(-r);
    const double d = dn * radial_at_r(state, p, r) - rh;
    return d * d;
  };
  CHECK(simpson(diff_sq, 0.0, 60.0, 100000) <= 1e-3);
}

TEST_CASE("sampled wavefunctions: node counts") {
  CHECK(sample(QuantumState(0, 0), PhysicalParams::atomic(0.05), 200.0, 4001).node_count == 0);
  CHECK(sample(QuantumState(2, 0), PhysicalParams::atomic(0.01), 600.0, 8001).node_count == 2);
  CHECK_THROWS_AS(sample(QuantumState(0, 0), PhysicalParams::atomic(0.05), 200.0, 1),
                  std::domain_error);
  CHECK_THROWS_AS(sample(QuantumState(3, 0), PhysicalParams::atomic(0.2), 200.0, 100),
                  UnboundError);
}

TEST_CASE("sampled wavefunction decays at both grid ends") {
  const auto w = sample(QuantumState(1, 1), PhysicalParams::atomic(0.05));
  double peak = 0.0;
  for (double v : w.values) peak = std::max(peak, std::abs(v));
  CHECK(std::abs(w.values.front()) < 1e-6 * peak);
  CHECK(std::abs(w.values.back()) < 1e-6 * peak);
}

TEST_CASE("small-r power law R ~ r^{l+1} for l=1") {
  const QuantumState state(0, 1);
  const PhysicalParams p = PhysicalParams::atomic(0.05);
  const double r1 = 1e-3, r2 = 1e-2;
  const double slope = std::log(std::abs(radial_at_r(state, p, r2)) /
                                std::abs(radial_at_r(state, p, r1))) /
                       std::log(r2 / r1);
  CHECK(slope == doctest::Approx(2.0).epsilon(0.025));
}

TEST_CASE("orthogonality of same-l states") {
  const PhysicalParams p = PhysicalParams::atomic(0.01);
  const double r_max = default_r_max(QuantumState(2, 0), p);
  const int count = 40001;
  const auto w0 = sample(QuantumState(0, 0), p, r_max, count);
  const auto w1 = sample(QuantumState(1, 0), p, r_max, count);
  const auto w2 = sample(QuantumState(2, 0), p, r_max, count);
  CHECK(std::abs(inner_product(w0, w0) - 1.0) <= 1e-6);
  CHECK(std::abs(inner_product(w0, w1)) <= 1e-6);
  CHECK(std::abs(inner_product(w0, w2)) <= 1e-6);
  CHECK(std::abs(inner_product(w1, w2)) <= 1e-6);

  const auto other = sample(QuantumState(0, 0), p, r_max / 2.0, count);
  CHECK_THROWS_AS(inner_product(w0, other), std::domain_error);
}

TEST_CASE("hypergeometric-form residual of the radial solution") {
  const PhysicalParams p = PhysicalParams::atomic(0.05);
  for (int n = 0; n <= 2; ++n) {
    for (int l = 0; l <= 1; ++l) {
      const QuantumState state(n, l);
      const double energy = energy_general(state, p);
      const DimensionlessTriple t = dimensionless(p, l, energy);
      auto R = [&](double s) { return radial_unnormalized(state, p, s); };
      const double h = 2.5e-4;
      for (double s = 0.1; s <= 0.9001; s += 0.05) {
        const double d2 = (-R(s - 2 * h) + 16.0 * R(s - h) - 30.0 * R(s) +
                           16.0 * R(s + h) - R(s + 2 * h)) /
                          (12.0 * h * h);
        const double d1 = (R(s - 2 * h) - 8.0 * R(s - h) + 8.0 * R(s + h) - R(s + 2 * h)) /
                          (12.0 * h);
        const double sig = s * (1.0 - s);
        const double poly = -(t.epsilon + t.beta + t.gamma) * s * s +
                            (2.0 * t.epsilon + t.beta) * s - t.epsilon;
        const double term1 = d2;
        const double term2 = (1.0 - s) / sig * d1;
        const double term3 = poly / (sig * sig) * R(s);
        const double residual = term1 + term2 + term3;
        const double scale = std::abs(term1) + std::abs(term2) + std::abs(term3);
        CHECK(std::abs(residual) <= 1e-6 * scale);
      }
    }
  }
}
