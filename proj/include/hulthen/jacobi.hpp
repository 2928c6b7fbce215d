#pragma once

namespace hulthen {

/// P_n^{(a,b)}(x) by the three-term recurrence in degree.  Requires n >= 0
/// and a, b > -1.
double jacobi(int n, double a, double b, double x);

}  // namespace hulthen
