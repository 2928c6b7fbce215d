#include "hulthen/numerov.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "hulthen/errors.hpp"
#include "hulthen/nu.hpp"

namespace hulthen {

namespace {

constexpr double kRescaleLimit = 1e250;

struct Core {
  // Everything that is fixed across energies within one solve.
  std::vector<double> v;  // potential on the grid
  std::vector<double> r;
  double h;
  double c;  // 2m/hbar^2
  int l;
  double series_slope;
};

Core make_core(const std::function<double(double)>& potential, int l,
               const ShootingConfig& cfg) {
  if (!(cfg.r_min > 0.0) || !(cfg.r_max > cfg.r_min) || cfg.steps < 1000) {
    throw std::invalid_argument("ShootingConfig: need 0 < r_min < r_max and steps >= 1000");
  }
  Core core;
  core.h = (cfg.r_max - cfg.r_min) / cfg.steps;
  core.c = 2.0 * cfg.mass / (cfg.hbar * cfg.hbar);
  core.l = l;
  core.series_slope = cfg.series_slope;
  core.r.resize(cfg.steps + 1);
  core.v.resize(cfg.steps + 1);
  for (int i = 0; i <= cfg.steps; ++i) {
    core.r[i] = cfg.r_min + i * core.h;
    core.v[i] = potential(core.r[i]);
  }
  return core;
}

void rescale_if_needed(std::vector<double>& u, int upto) {
  if (std::abs(u[upto]) > kRescaleLimit) {
    for (int j = 0; j <= upto; ++j) u[j] *= 1.0 / kRescaleLimit;
  }
}

IntegrationResult integrate_core(const Core& core, double energy) {
  if (!(energy < 0.0)) {
    throw std::invalid_argument("integrate_numerov requires E < 0");
  }
  const int n_pts = static_cast<int>(core.r.size());
  const int top = n_pts - 1;
  const double h = core.h;
  const double h2_12 = h * h / 12.0;

  std::vector<double> f(n_pts);
  for (int i = 0; i < n_pts; ++i) f[i] = core.c * (core.v[i] - energy);

  // Outermost classical turning point.
  int match = -1;
  for (int i = top - 2; i >= 2; --i) {
    if (f[i] <= 0.0) {
      match = i;
      break;
    }
  }
  if (match < 2) match = n_pts / 2;

  // Outward sweep, seeded by the r^{l+1}(1 + c1 r) series.
  std::vector<double> out(n_pts, 0.0);
  auto series = [&](double r) {
    return std::pow(r, core.l + 1) * (1.0 + core.series_slope * r);
  };
  out[0] = series(core.r[0]);
  out[1] = series(core.r[1]);
  int nodes = 0;
  double prev_sign_val = out[1];
  for (int i = 1; i < top; ++i) {
    // Grouped as u - h^2/12 (f u): f[0] ~ 1/r_min^2 is huge but f*u stays finite.
    const double num = 2.0 * out[i] + 10.0 * h2_12 * (f[i] * out[i]) -
                       (out[i - 1] - h2_12 * (f[i - 1] * out[i - 1]));
    out[i + 1] = num / (1.0 - h2_12 * f[i + 1]);
    rescale_if_needed(out, i + 1);
    // Count sign changes only inside the classically allowed region: past the
    // turning point the admixture of the growing solution makes the tail of
    // the outward sweep meaningless and would produce spurious nodes.
    if (i + 1 <= match && out[i + 1] != 0.0) {
      if (prev_sign_val != 0.0 && std::signbit(out[i + 1]) != std::signbit(prev_sign_val)) {
        ++nodes;
      }
      prev_sign_val = out[i + 1];
    }
  }

  // Inward sweep from the exponential tail, kappa = sqrt(-2mE)/hbar.
  std::vector<double> in(n_pts, 0.0);
  const double kappa = std::sqrt(core.c * (-energy));
  in[top] = std::exp(-kappa * h);
  in[top - 1] = 1.0;
  for (int i = top - 1; i > std::max(match - 1, 1); --i) {
    const double num = 2.0 * in[i] + 10.0 * h2_12 * (f[i] * in[i]) -
                       (in[i + 1] - h2_12 * (f[i + 1] * in[i + 1]));
    in[i - 1] = num / (1.0 - h2_12 * f[i - 1]);
    if (std::abs(in[i - 1]) > kRescaleLimit) {
      for (int j = i - 1; j <= top; ++j) in[j] *= 1.0 / kRescaleLimit;
    }
  }

  // Log-derivative defect at the matching point.  Central differences on
  // both sides cancel identically when the two solutions are proportional.
  double defect = std::numeric_limits<double>::infinity();
  if (out[match] != 0.0 && in[match] != 0.0) {
    const double d_out = (out[match + 1] - out[match - 1]) / (2.0 * h * out[match]);
    const double d_in = (in[match + 1] - in[match - 1]) / (2.0 * h * in[match]);
    defect = d_out - d_in;
  }

  return {std::move(out), std::move(in), defect, nodes, match, h};
}

}  // namespace

IntegrationResult integrate_numerov(const std::function<double(double)>& potential,
                                    int l, double energy, const ShootingConfig& cfg) {
  return integrate_core(make_core(potential, l, cfg), energy);
}

OracleResult solve_eigenvalue(const std::function<double(double)>& potential,
                              int l, int n, double seed_energy, ShootingConfig cfg) {
  if (!(seed_energy < 0.0)) {
    throw std::invalid_argument("solve_eigenvalue requires a negative seed energy");
  }
  if (cfg.r_max <= 0.0) {
    const double kappa = std::sqrt(2.0 * cfg.mass * (-seed_energy)) / cfg.hbar;
    cfg.r_max = std::max(35.0 / kappa, 20.0);
  }
  // Keep the step small enough for the 1e-8 eigenvalue target.
  cfg.steps = std::max(cfg.steps,
                       static_cast<int>(std::ceil((cfg.r_max - cfg.r_min) / 0.005)));

  const Core core = make_core(potential, l, cfg);
  auto defect_at = [&](double energy) { return integrate_core(core, energy).match_defect; };

  // The log-derivative matching defect decreases monotonically through each
  // eigenvalue (between its poles), so bracket a sign change around the seed
  // by symmetric widening and then bisect on the defect sign.
  double lo = 0.0, hi = 0.0, d_lo = 0.0, d_hi = 0.0;
  bool bracketed = false;
  for (double width = 1e-5; width <= 0.5; width *= 2.0) {
    lo = seed_energy * (1.0 + width);
    hi = std::min(seed_energy * (1.0 - width), -1e-13);
    d_lo = defect_at(lo);
    d_hi = defect_at(hi);
    if (std::isfinite(d_lo) && std::isfinite(d_hi) &&
        std::signbit(d_lo) != std::signbit(d_hi)) {
      bracketed = true;
      break;
    }
  }
  if (!bracketed) {
    std::ostringstream msg;
    msg << "no matching-defect sign change near the seed energy " << seed_energy
        << " for n = " << n << " nodes";
    throw NumericalError(msg.str());
  }

  for (int i = 0;
       i < cfg.max_bisections &&
       hi - lo > std::min(cfg.energy_tol, 4.0 * std::abs(lo) * 1e-16);
       ++i) {
    const double mid = 0.5 * (lo + hi);
    const double d_mid = defect_at(mid);
    if (!std::isfinite(d_mid)) break;
    if (std::signbit(d_mid) == std::signbit(d_lo)) {
      lo = mid;
      d_lo = d_mid;
    } else {
      hi = mid;
      d_hi = d_mid;
    }
  }

  const double energy = 0.5 * (lo + hi);
  const IntegrationResult final_res = integrate_core(core, energy);
  const bool converged = (hi - lo) <= std::max(cfg.energy_tol, 8.0 * std::abs(energy) * 1e-16) &&
                         final_res.node_count == n &&
                         std::abs(final_res.match_defect) <= 1e-8;
  return {energy, final_res.node_count, final_res.match_defect, converged};
}

OracleResult oracle_energy_effective(const QuantumState& state, const PhysicalParams& p,
                                     ShootingConfig cfg) {
  const double seed = energy_general(state, p);  // throws when unbound
  cfg.mass = p.mass;
  cfg.hbar = p.hbar;
  cfg.series_slope = -p.mass * p.Z * p.charge_sq / (p.hbar * p.hbar * (state.l + 1));
  auto potential = [&p, l = state.l](double r) { return potential_effective(p, l, r); };
  return solve_eigenvalue(potential, state.l, state.n, seed, cfg);
}

OracleResult oracle_energy_hulthen(const QuantumState& state, const PhysicalParams& p,
                                   ShootingConfig cfg) {
  const double seed = energy_formula(state, p);
  if (!(seed < 0.0)) {
    throw UnboundError("closed-form seed is non-negative; no bound state expected",
                       critical_screening(state, p));
  }
  cfg.mass = p.mass;
  cfg.hbar = p.hbar;
  cfg.series_slope = -p.mass * p.Z * p.charge_sq / (p.hbar * p.hbar * (state.l + 1));
  const double centrifugal =
      static_cast<double>(state.l) * (state.l + 1) * p.hbar * p.hbar / (2.0 * p.mass);
  auto potential = [&p, centrifugal](double r) {
    return potential_hulthen(p, r) + centrifugal / (r * r);
  };
  return solve_eigenvalue(potential, state.l, state.n, seed, cfg);
}

}  // namespace hulthen
