#include "hulthen/jacobi.hpp"

#include <stdexcept>

namespace hulthen {

double jacobi(int n, double a, double b, double x) {
  if (n < 0) {
    throw std::domain_error("jacobi requires n >= 0");
  }
  if (a <= -1.0 || b <= -1.0) {
    throw std::domain_error("jacobi requires a > -1 and b > -1");
  }
  if (n == 0) return 1.0;

  double pm1 = 1.0;
  double p = 0.5 * (a - b) + 0.5 * (a + b + 2.0) * x;
  for (int m = 2; m <= n; ++m) {
    const double c = 2.0 * m + a + b;
    const double a1 = (c - 1.0) * (c * (c - 2.0) * x + a * a - b * b);
    const double a2 = 2.0 * (m + a - 1.0) * (m + b - 1.0) * c;
    const double a0 = 2.0 * m * (m + a + b) * (c - 2.0);
    const double next = (a1 * p - a2 * pm1) / a0;
    pm1 = p;
    p = next;
  }
  return p;
}

}  // namespace hulthen
