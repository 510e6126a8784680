#include "lambda_osc/ladder_function.hpp"

#include "lambda_osc/numeric.hpp"

#include <cmath>
#include <stdexcept>

namespace lambda_osc {

QPoly z_polynomial(const Rational& lambda) {
  return QPoly(std::vector<Rational>{Rational(1), Rational(0), lambda});
}

QPoly z_power(const Rational& lambda, unsigned k) {
  QPoly out = QPoly::constant(Rational(1));
  const QPoly z = z_polynomial(lambda);
  for (unsigned i = 0; i < k; ++i) out *= z;
  return out;
}

LadderFunction::LadderFunction(Rational lambda, Rational exponent, QPoly poly)
    : lambda_(std::move(lambda)), exponent_(std::move(exponent)), poly_(std::move(poly)) {}

LadderFunction LadderFunction::derivative() const {
  const QPoly y = QPoly::variable();
  if (gaussian()) {
    // d/dy [e^{t y^2} Q] = e^{t y^2} (2 t y Q + Q')
    return {lambda_, exponent_, y * poly_ * Rational(2 * exponent_) + poly_.derivative()};
  }
  QPoly p = y * poly_ * Rational(2 * lambda_ * exponent_) + z_polynomial(lambda_) * poly_.derivative();
  return {lambda_, Rational(exponent_ - 1), std::move(p)};
}

LadderFunction LadderFunction::times_z_power(const Rational& k) const {
  if (gaussian()) return *this;
  return {lambda_, Rational(exponent_ + k), poly_};
}

LadderFunction LadderFunction::times_poly(const QPoly& p) const { return {lambda_, exponent_, poly_ * p}; }

LadderFunction LadderFunction::scaled(const Rational& c) const { return {lambda_, exponent_, poly_ * c}; }

LadderFunction LadderFunction::lowered(const Rational& by) const {
  if (by.get_den() != 1 || sgn(by) < 0) throw std::domain_error("z-exponent shift must be a natural number");
  if (gaussian()) return *this;
  return {lambda_, Rational(exponent_ - by), poly_ * z_power(lambda_, static_cast<unsigned>(by.get_num().get_ui()))};
}

namespace {

void require_same_lambda(const LadderFunction& a, const LadderFunction& b) {
  if (a.lambda() != b.lambda()) throw std::invalid_argument("ladder functions with different parameters");
}

// Rewrites both operands over a common exponent; nullopt-like failure via bool.
bool align(const LadderFunction& a, const LadderFunction& b, LadderFunction& ra, LadderFunction& rb) {
  if (a.gaussian()) {
    if (a.exponent() != b.exponent()) return false;
    ra = a;
    rb = b;
    return true;
  }
  Rational d = a.exponent() - b.exponent();
  if (d.get_den() != 1) return false;
  if (sgn(d) >= 0) {
    ra = a.lowered(d);
    rb = b;
  } else {
    ra = a;
    rb = b.lowered(Rational(-d));
  }
  return true;
}

}  // namespace

LadderFunction operator+(const LadderFunction& a, const LadderFunction& b) {
  require_same_lambda(a, b);
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  LadderFunction ra = a, rb = b;
  if (!align(a, b, ra, rb)) throw std::domain_error("sum leaves the z^s*Q family (non-integer exponent gap)");
  return {a.lambda(), ra.exponent(), ra.poly() + rb.poly()};
}

LadderFunction operator-(const LadderFunction& a, const LadderFunction& b) { return a + (-b); }

bool operator==(const LadderFunction& a, const LadderFunction& b) {
  if (a.lambda() != b.lambda()) return false;
  if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
  LadderFunction ra = a, rb = b;
  if (!align(a, b, ra, rb)) return false;
  return ra.poly() == rb.poly();
}

double LadderFunction::evaluate(double y) const {
  std::vector<double> c;
  c.reserve(poly_.size());
  for (const auto& q : poly_.coeffs()) c.push_back(to_double(q));
  const double q = horner_compensated(c, y);
  const double s = to_double(exponent_);
  if (gaussian()) return q * std::exp(s * y * y);
  const double z = 1.0 + to_double(lambda_) * y * y;
  if (!(z > 0.0)) throw std::domain_error("evaluation outside the domain 1 + L y^2 > 0");
  return q * std::pow(z, s);
}

std::string LadderFunction::to_string() const {
  std::string poly = lambda_osc::to_string(poly_, "y");
  if (gaussian()) return "exp(" + lambda_osc::to_string(exponent_) + "*y^2)*(" + poly + ")";
  return "z^(" + lambda_osc::to_string(exponent_) + ")*(" + poly + ")";
}

}  // namespace lambda_osc
