#include <doctest.h>

#include <cmath>
#include <random>
#include <stdexcept>

#include "hulthen/jacobi.hpp"

using namespace hulthen;

namespace {

// Independent Rodrigues-formula oracle:
//   P_n^{(a,b)}(x) = (-1)^n / (2^n n!) (1-x)^{-a} (1+x)^{-b}
//                    d^n/dx^n [ (1-x)^{n+a} (1+x)^{n+b} ],
// with the n-th derivative expanded exactly by the Leibniz rule.
double falling(double v, int k) {
  double acc = 1.0;
  for (int i = 0; i < k; ++i) acc *= (v - i);
  return acc;
}

double binom(int n, int k) {
  double acc = 1.0;
  for (int i = 1; i <= k; ++i) acc *= static_cast<double>(n - k + i) / i;
  return acc;
}

double jacobi_rodrigues(int n, double a, double b, double x) {
  double deriv = 0.0;
  for (int k = 0; k <= n; ++k) {
    // d^k (1-x)^{n+a} = (-1)^k (n+a)_falling^k (1-x)^{n+a-k}
    // d^{n-k} (1+x)^{n+b} = (n+b)_falling^{n-k} (1+x)^{b+k}
    const double term = binom(n, k) * ((k % 2 == 0) ? 1.0 : -1.0) * falling(n + a, k) *
                        std::pow(1.0 - x, n + a - k) * falling(n + b, n - k) *
                        std::pow(1.0 + x, b + k);
    deriv += term;
  }
  double fact = 1.0;
  for (int i = 2; i <= n; ++i) fact *= i;
  return ((n % 2 == 0) ? 1.0 : -1.0) / (std::pow(2.0, n) * fact) *
         std::pow(1.0 - x, -a) * std::pow(1.0 + x, -b) * deriv;
}

}  // namespace

TEST_CASE("jacobi basics") {
  CHECK(jacobi(0, 0.3, -0.5, 0.7) == 1.0);
  CHECK(jacobi(0, 100.0, 2.0, -0.9) == 1.0);
  // Legendre case P_1(x) = x.
  CHECK(jacobi(1, 0.0, 0.0, 0.5) == doctest::Approx(0.5));
  CHECK_THROWS_AS(jacobi(2, -1.0, 0.0, 0.5), std::domain_error);
  CHECK_THROWS_AS(jacobi(2, 0.0, -1.5, 0.5), std::domain_error);
  CHECK_THROWS_AS(jacobi(-1, 0.0, 0.0, 0.5), std::domain_error);
}

TEST_CASE("jacobi against the Rodrigues oracle at a fixed point") {
  const double expected = jacobi_rodrigues(3, 1.7, 2.3, 0.4);
  CHECK(jacobi(3, 1.7, 2.3, 0.4) ==
        doctest::Approx(expected).epsilon(1e-10));
}

TEST_CASE("jacobi recurrence matches Rodrigues for random parameters") {
  std::mt19937 rng(42);
  std::uniform_real_distribution<double> ab(-0.9, 5.0);
  std::uniform_real_distribution<double> xs(-0.95, 0.95);
  for (int trial = 0; trial < 300; ++trial) {
    const double a = ab(rng);
    const double b = ab(rng);
    const double x = xs(rng);
    for (int n = 0; n <= 6; ++n) {
      const double ref = jacobi_rodrigues(n, a, b, x);
      const double got = jacobi(n, a, b, x);
      CHECK(std::abs(got - ref) <= 1e-10 * std::max(std::abs(ref), 1.0));
    }
  }
}

TEST_CASE("large first parameter stays finite and matches Rodrigues") {
  // The radial solutions use a = 2 sqrt(eps), which can reach O(1000).
  for (int n = 0; n <= 4; ++n) {
    const double ref = jacobi_rodrigues(n, 39.0, 1.0, -0.2);
    CHECK(jacobi(n, 39.0, 1.0, -0.2) == doctest::Approx(ref).epsilon(1e-10));
  }
}
