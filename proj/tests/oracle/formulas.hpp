#pragma once

// Closed-form bounds re-derived on the test side in long double, written
// from the inequalities themselves rather than from the library's algebra.

#include <cmath>
#include <utility>

namespace oracle {

using LD = long double;

// Cheeger lower bound H for systole s and area V.
inline LD cheeger_lower(LD s, LD V) { return 1.0L / std::sqrt(V * V / (4.0L * s * s) + 1.0L); }

// Upper bound for the limit-set dimension via lambda0 >= H^2/4 and
// lambda0 = delta (1 - delta): the larger root of x^2 - x + H^2/4 = 0.
inline LD dim_upper(LD s, LD V) {
  const LD H = cheeger_lower(s, V);
  return (1.0L + std::sqrt(1.0L - H * H)) / 2.0L;
}

// Lower bound from lambda0 <= 5 l / (2 V): larger root of x^2 - x + 5l/(2V) = 0.
inline LD dim_lower(LD l, LD V) { return (1.0L + std::sqrt(1.0L - 4.0L * 5.0L * l / (2.0L * V))) / 2.0L; }

inline LD rayleigh(LD l, LD V) { return (std::exp(1.0L) - std::exp(-1.0L)) * l / V; }

inline LD hat(LD delta) { return 2.0L * delta + 1.0L; }

inline LD monotone_value(int g) {
  const LD x = static_cast<LD>(g);
  return 5.0L * std::acosh(2.0L * x - 1.0L) / (std::acos(-1.0L) * (x - 1.0L));
}

// Brute-force minimum of cosh(r) L / (V + sinh(r) L) on r = 0, step, 2 step, ...
// up to rMax; returns (min value, argmin).
inline std::pair<double, double> grid_min_cheeger(double L, double V, double step, double rMax) {
  double best = 1e300, arg = 0.0;
  const long n = static_cast<long>(rMax / step);
  for (long i = 0; i <= n; ++i) {
    const double r = static_cast<double>(i) * step;
    const double v = std::cosh(r) * L / (V + std::sinh(r) * L);
    if (v < best) {
      best = v;
      arg = r;
    }
  }
  return {best, arg};
}

}  // namespace oracle
