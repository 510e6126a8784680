#pragma once

#include <cmath>
#include <span>
#include <vector>

namespace lambda_osc {

/// Compensated Horner scheme (Graillat, Langlois, Louvet). Coefficients are
/// indexed by power. Accurate to roughly twice working precision before the
/// condition number kicks in, which keeps root bisection stable near the
/// domain edge.
inline double horner_compensated(std::span<const double> c, double x) {
  if (c.empty()) return 0.0;
  double s = c.back();
  double err = 0.0;
  for (std::size_t i = c.size() - 1; i-- > 0;) {
    const double p = s * x;
    const double pi = std::fma(s, x, -p);
    const double t = p + c[i];
    const double bv = t - p;
    const double sigma = (p - (t - bv)) + (c[i] - bv);
    s = t;
    err = err * x + (pi + sigma);
  }
  return s + err;
}

/// Value and first two derivatives by plain Horner.
struct PolyValue {
  double value;
  double d1;
  double d2;
};

inline PolyValue horner_with_derivatives(std::span<const double> c, double x) {
  double p = 0.0, dp = 0.0, ddp = 0.0;
  for (std::size_t i = c.size(); i-- > 0;) {
    ddp = ddp * x + 2.0 * dp;
    dp = dp * x + p;
    p = p * x + c[i];
  }
  return {p, dp, ddp};
}

}  // namespace lambda_osc
