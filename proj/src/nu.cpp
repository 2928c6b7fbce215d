#include "hulthen/nu.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace hulthen {

namespace {

void require_bound_epsilon(double epsilon) {
  if (!(epsilon > 0.0)) {
    throw UnboundError("epsilon <= 0: not a bound state (E >= 0)");
  }
}

UnboundError make_unbound(const QuantumState& state, const PhysicalParams& p) {
  const double dc = critical_screening(state, p);
  std::ostringstream msg;
  msg << "state (n=" << state.n << ", l=" << state.l << ") is unbound at delta=" << p.delta
      << " (critical screening delta_c=" << dc << ")";
  if (couplings(p, state.l).v1 <= 0.0) {
    msg << "; attractive coupling v1 <= 0, outside the validity region";
  }
  return UnboundError(msg.str(), dc);
}

}  // namespace

NuPolynomials nu_polynomials(const DimensionlessTriple& t) {
  NuPolynomials out;
  out.tau_tilde = {1.0, -1.0};
  out.sigma = {0.0, 1.0, -1.0};
  out.sigma_tilde = {-t.epsilon, 2.0 * t.epsilon + t.beta,
                     -(t.epsilon + t.beta + t.gamma)};
  return out;
}

std::pair<double, double> nu_k_roots(const DimensionlessTriple& t) {
  if (t.epsilon < 0.0) {
    throw UnboundError("nu_k_roots requires epsilon >= 0");
  }
  const double arg = 1.0 + 4.0 * t.gamma;
  if (arg < 0.0) {
    throw std::domain_error("nu_k_roots requires 1 + 4*gamma >= 0");
  }
  const double root = std::sqrt(t.epsilon * arg);
  return {-t.beta + root, -t.beta - root};
}

NuBranch nu_branch(const DimensionlessTriple& t) {
  require_bound_epsilon(t.epsilon);
  const double se = std::sqrt(t.epsilon);
  const double sg = std::sqrt(1.0 + 4.0 * t.gamma);
  NuBranch b;
  b.k = -t.beta - std::sqrt(t.epsilon * (1.0 + 4.0 * t.gamma));  // k_minus
  b.pi_const = se;
  b.pi_slope = -0.5 - 0.5 * (2.0 * se + sg);
  b.tau_slope = -(2.0 + 2.0 * se + sg);
  b.lambda = -t.beta - 0.5 * (1.0 + 2.0 * se) * (1.0 + sg);
  return b;
}

double lambda_n(int n, const DimensionlessTriple& t) {
  if (n < 0) {
    throw std::domain_error("lambda_n requires n >= 0");
  }
  require_bound_epsilon(t.epsilon);
  const double se = std::sqrt(t.epsilon);
  const double sg = std::sqrt(1.0 + 4.0 * t.gamma);
  return -(2.0 + 2.0 * se + sg) * n - static_cast<double>(n) * (n - 1);
}

double epsilon_n(int n, double beta, double gamma) {
  if (n < 0) {
    throw std::domain_error("epsilon_n requires n >= 0");
  }
  if (gamma < 0.0) {
    throw std::domain_error("epsilon_n requires gamma >= 0");
  }
  const double sg = std::sqrt(1.0 + 4.0 * gamma);
  const double bracket =
      0.5 * (1.0 + 2.0 * n) - (static_cast<double>(n) * (n + 1) + beta) / (1.0 + 2.0 * n + sg);
  if (bracket == 0.0) {
    throw ThresholdError("epsilon_n: threshold state (E = 0)");
  }
  return bracket * bracket;
}

double energy_formula(const QuantumState& state, const PhysicalParams& p) {
  const double N = state.principal();
  const double hbar2 = p.hbar * p.hbar;
  const double bracket = p.mass * p.Z * p.charge_sq / (hbar2 * N) - N * p.delta / 2.0;
  return -hbar2 / (2.0 * p.mass) * bracket * bracket;
}

double energy_general(const QuantumState& state, const PhysicalParams& p) {
  if (!is_bound(state, p)) {
    throw make_unbound(state, p);
  }
  return energy_formula(state, p);
}

double energy_via_epsilon(const QuantumState& state, const PhysicalParams& p) {
  if (!is_bound(state, p)) {
    throw make_unbound(state, p);
  }
  const double scale = 2.0 * p.mass / (p.hbar * p.hbar * p.delta * p.delta);
  const double beta = scale * couplings(p, state.l).v1;
  const double gamma = static_cast<double>(state.l) * (state.l + 1);
  const double eps = epsilon_n(state.n, beta, gamma);
  return -eps / scale;
}

double energy_atomic(int nbar, int l, double delta) {
  if (nbar < 1 || l < 0) {
    throw std::domain_error("energy_atomic requires nbar >= 1 and l >= 0");
  }
  return energy_general(QuantumState(nbar - 1, l), PhysicalParams::atomic(delta));
}

double critical_screening(const QuantumState& state, const PhysicalParams& p) {
  const double N = state.principal();
  return 2.0 * p.mass * p.Z * p.charge_sq / (p.hbar * p.hbar * N * N);
}

bool is_bound(const QuantumState& state, const PhysicalParams& p) {
  return p.delta < critical_screening(state, p);
}

int bound_state_count(int l, const PhysicalParams& p) {
  if (l < 0) {
    throw std::domain_error("bound_state_count requires l >= 0");
  }
  const double a = 2.0 * p.mass * p.Z * p.charge_sq / (p.hbar * p.hbar);
  int count = 0;
  for (int N = l + 1;; ++N) {
    if (!(p.delta < a / (static_cast<double>(N) * N))) break;
    ++count;
  }
  return count;
}

}  // namespace hulthen
