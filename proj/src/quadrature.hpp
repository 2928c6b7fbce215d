#pragma once

// Adaptive Gauss-Kronrod (G7,K15) quadrature used for wavefunction
// normalization.  Internal to the library.

#include <cmath>
#include <cstddef>
#include <functional>

#include "hulthen/errors.hpp"

namespace hulthen::detail {

struct GK15Result {
  double value;
  double error;
};

inline GK15Result gk15(const std::function<double(double)>& f, double a, double b) {
  // Kronrod 15-point nodes/weights on [-1, 1]; the odd-index nodes carry the
  // embedded Gauss-7 rule.
  static const double xk[15] = {
      -0.991455371120813, -0.949107912342759, -0.864864423359769,
      -0.741531185599394, -0.586087235467691, -0.405845151377397,
      -0.207784955007898, 0.0,                0.207784955007898,
      0.405845151377397,  0.586087235467691,  0.741531185599394,
      0.864864423359769,  0.949107912342759,  0.991455371120813};
  static const double wk[15] = {
      0.022935322010529, 0.063092092629979, 0.104790010322250,
      0.140653259715525, 0.169004726639267, 0.190350578064785,
      0.204432940075298, 0.209482141084728, 0.204432940075298,
      0.190350578064785, 0.169004726639267, 0.140653259715525,
      0.104790010322250, 0.063092092629979, 0.022935322010529};
  static const double wg[7] = {0.129484966168870, 0.279705391489277,
                               0.381830050505119, 0.417959183673469,
                               0.381830050505119, 0.279705391489277,
                               0.129484966168870};

  const double c = 0.5 * (a + b);
  const double h = 0.5 * (b - a);
  double sk = 0.0, sg = 0.0;
  for (int i = 0; i < 15; ++i) {
    const double fx = f(c + h * xk[i]);
    sk += wk[i] * fx;
    if (i % 2 == 1) sg += wg[(i - 1) / 2] * fx;
  }
  const double kron = sk * h;
  const double gauss = sg * h;
  return {kron, std::abs(kron - gauss)};
}

inline double adaptive_segment(const std::function<double(double)>& f, double a,
                               double b, double tol_density, int depth) {
  const GK15Result r = gk15(f, a, b);
  if (r.error <= tol_density * (b - a) ||
      (b - a) < 1e-14 * std::max(std::abs(a), 1.0)) {
    return r.value;
  }
  if (depth > 60) {
    throw NumericalError("adaptive quadrature failed to converge");
  }
  const double m = 0.5 * (a + b);
  return adaptive_segment(f, a, m, tol_density, depth + 1) +
         adaptive_segment(f, m, b, tol_density, depth + 1);
}

// Integrates f over [a, b] with total error bounded by roughly
// rel_tol * |integral| (abs_floor guards the all-zero case).
inline double adaptive_quadrature(const std::function<double(double)>& f, double a,
                                  double b, double rel_tol,
                                  double abs_floor = 1e-300) {
  const GK15Result whole = gk15(f, a, b);
  const double scale = std::max(std::abs(whole.value), abs_floor);
  const double tol_density = rel_tol * scale / (b - a);
  return adaptive_segment(f, a, b, tol_density, 0);
}

}  // namespace hulthen::detail
