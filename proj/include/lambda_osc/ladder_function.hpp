#pragma once

#include "lambda_osc/polynomial.hpp"
#include "lambda_osc/rational.hpp"

#include <string>

namespace lambda_osc {

/// The function z^s * Q(y) with z = 1 + L y^2, L a fixed rational.
///
/// The family is closed under d/dy, multiplication by y and by powers of
/// sqrt(z), which is everything the ladder operators and the Rodrigues
/// formula need. For L = 0 the weight z^s degenerates; there `exponent` is
/// read as the Gaussian coefficient t of exp(t y^2) instead, the L -> 0 limit
/// of z^(t/L).
class LadderFunction {
 public:
  LadderFunction(Rational lambda, Rational exponent, QPoly poly);

  static LadderFunction zero(const Rational& lambda) { return {lambda, Rational(0), QPoly()}; }

  /// z^s * 1 (or exp(t y^2) for L = 0).
  static LadderFunction weight(const Rational& lambda, const Rational& exponent) {
    return {lambda, exponent, QPoly::constant(Rational(1))};
  }

  const Rational& lambda() const { return lambda_; }
  const Rational& exponent() const { return exponent_; }
  const QPoly& poly() const { return poly_; }
  bool is_zero() const { return poly_.is_zero(); }
  bool gaussian() const { return sgn(lambda_) == 0; }

  /// d/dy [z^s Q] = z^(s-1) (2 L s y Q + z Q').
  LadderFunction derivative() const;

  /// z^k * f. Identity when L = 0.
  LadderFunction times_z_power(const Rational& k) const;

  LadderFunction times_poly(const QPoly& p) const;
  LadderFunction scaled(const Rational& c) const;

  /// Same function written with a z-exponent lowered by the non-negative
  /// integer `by`. Throws std::domain_error if `by` is not a natural number.
  LadderFunction lowered(const Rational& by) const;

  friend LadderFunction operator+(const LadderFunction& a, const LadderFunction& b);
  friend LadderFunction operator-(const LadderFunction& a, const LadderFunction& b);
  friend LadderFunction operator-(const LadderFunction& a) { return a.scaled(Rational(-1)); }

  /// Equality as functions of y (exponents differing by an integer are
  /// reconciled; a non-integer difference can only match if both are zero).
  friend bool operator==(const LadderFunction& a, const LadderFunction& b);

  double evaluate(double y) const;

  std::string to_string() const;

 private:
  Rational lambda_;
  Rational exponent_;
  QPoly poly_;
};

/// z = 1 + L y^2 as a polynomial.
QPoly z_polynomial(const Rational& lambda);

/// z^k for a natural number k.
QPoly z_power(const Rational& lambda, unsigned k);

}  // namespace lambda_osc
