#pragma once

#include <cmath>
#include <functional>
#include <vector>

namespace ptcomb::detail {

/// Uniform grid with at least `points_per_pi` samples per pi of range.
inline std::vector<double> scan_grid(double lo, double hi, double points_per_pi) {
  const double span = hi - lo;
  const std::size_t n =
      std::max<std::size_t>(8, static_cast<std::size_t>(std::ceil(span / M_PI * points_per_pi)) + 1);
  std::vector<double> xs(n);
  for (std::size_t i = 0; i < n; ++i)
    xs[i] = lo + span * static_cast<double>(i) / static_cast<double>(n - 1);
  xs.back() = hi;
  return xs;
}

/// Bisection on a bracketing interval [a, b] with f(a)*f(b) <= 0, down to
/// width xtol (or the floating-point floor of the interval).
inline double bisect(const std::function<double(double)>& f, double a, double b,
                     double fa, double xtol) {
  for (int it = 0; it < 200 && (b - a) > xtol; ++it) {
    const double m = 0.5 * (a + b);
    if (m <= a || m >= b) break;
    const double fm = f(m);
    if (fm == 0.0) return m;
    if ((fa < 0.0) == (fm < 0.0)) {
      a = m;
      fa = fm;
    } else {
      b = m;
    }
  }
  return 0.5 * (a + b);
}

}  // namespace ptcomb::detail
