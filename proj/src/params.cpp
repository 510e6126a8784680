#include "lambda_osc/params.hpp"

#include <cmath>
#include <limits>

namespace lambda_osc {

std::string to_string(SignClass s) {
  switch (s) {
    case SignClass::negative: return "negative";
    case SignClass::zero: return "zero";
    case SignClass::positive: return "positive";
  }
  return "unknown";
}

DeformationParam classify(double lambda) {
  if (!std::isfinite(lambda)) throw std::invalid_argument("deformation parameter must be finite");
  DeformationParam d;
  d.value = lambda;
  if (lambda == 0.0) {
    d.sign_class = SignClass::zero;
    return d;
  }
  if (lambda < 0.0) {
    d.sign_class = SignClass::negative;
    d.half_width = 1.0 / std::sqrt(-lambda);
    return d;
  }
  d.sign_class = SignClass::positive;
  const double inv = 1.0 / lambda;
  d.cutoff = inv;
  const double nearest = std::round(inv);
  const double snap = 4.0 * std::numeric_limits<double>::epsilon() * inv;
  if (nearest >= 1.0 && std::fabs(inv - nearest) <= snap) {
    d.max_bound_index = static_cast<long>(nearest) - 1;
  } else {
    d.max_bound_index = static_cast<long>(std::floor(inv));
  }
  return d;
}

DeformationParam classify(const Rational& lambda) {
  DeformationParam d;
  d.value = to_double(lambda);
  d.exact = lambda;
  const int s = sgn(lambda);
  if (s == 0) {
    d.sign_class = SignClass::zero;
    return d;
  }
  if (s < 0) {
    d.sign_class = SignClass::negative;
    d.half_width = 1.0 / std::sqrt(-d.value);
    return d;
  }
  d.sign_class = SignClass::positive;
  Rational inv = 1 / lambda;
  d.cutoff = to_double(inv);
  mpz_class fl;
  mpz_fdiv_q(fl.get_mpz_t(), inv.get_num_mpz_t(), inv.get_den_mpz_t());
  // Strict inequality m < 1/L: an integer reciprocal excludes itself.
  if (inv.get_den() == 1) fl -= 1;
  d.max_bound_index = fl.get_si();
  return d;
}

double normalizability_exponent(long m, double lambda) {
  return 2.0 * static_cast<double>(m) - 1.0 - 2.0 / lambda;
}

AdimMap AdimMap::from(const PhysicalParams<double>& p) {
  p.validate();
  return AdimMap{std::sqrt(p.hbar / (p.mass * p.alpha)), p.deformation()};
}

std::pair<double, double> to_adimensional(const PhysicalParams<double>& p, double x) {
  const AdimMap map = AdimMap::from(p);
  return {map.to_y(x), map.deformation};
}

double to_physical(const PhysicalParams<double>& p, double y) { return AdimMap::from(p).to_x(y); }

}  // namespace lambda_osc
