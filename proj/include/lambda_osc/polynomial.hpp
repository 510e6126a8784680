#pragma once

#include "lambda_osc/rational.hpp"

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace lambda_osc {

template <class C>
class Polynomial;

/// Ring operations the polynomial template needs from its coefficient type.
template <class C>
struct ring_traits;

template <>
struct ring_traits<Rational> {
  static Rational zero() { return Rational(0); }
  static Rational one() { return Rational(1); }
  static Rational from_rational(const Rational& q) { return q; }
  static bool is_zero(const Rational& q) { return sgn(q) == 0; }
};

template <class C>
struct ring_traits<Polynomial<C>> {
  static Polynomial<C> zero() { return Polynomial<C>(); }
  static Polynomial<C> one() { return Polynomial<C>::constant(ring_traits<C>::one()); }
  static Polynomial<C> from_rational(const Rational& q) {
    return Polynomial<C>::constant(ring_traits<C>::from_rational(q));
  }
  static bool is_zero(const Polynomial<C>& p) { return p.is_zero(); }
};

/// Dense univariate polynomial, coefficients indexed by power.
///
/// Trailing zero coefficients are never stored, so `degree()` is the true
/// degree (-1 for the zero polynomial). Interior zeros are kept explicitly.
template <class C>
class Polynomial {
 public:
  using coeff_type = C;

  Polynomial() = default;

  explicit Polynomial(std::vector<C> coeffs) : c_(std::move(coeffs)) { trim(); }

  static Polynomial constant(C value) { return Polynomial(std::vector<C>{std::move(value)}); }

  static Polynomial monomial(C value, std::size_t power) {
    std::vector<C> c(power + 1, ring_traits<C>::zero());
    c[power] = std::move(value);
    return Polynomial(std::move(c));
  }

  /// The identity polynomial x.
  static Polynomial variable() { return monomial(ring_traits<C>::one(), 1); }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  std::size_t size() const { return c_.size(); }
  const std::vector<C>& coeffs() const { return c_; }

  /// Coefficient of x^i; zero beyond the stored range.
  C coeff(std::size_t i) const { return i < c_.size() ? c_[i] : ring_traits<C>::zero(); }

  const C& leading() const {
    if (c_.empty()) throw std::logic_error("leading coefficient of zero polynomial");
    return c_.back();
  }

  Polynomial derivative() const {
    if (c_.size() <= 1) return Polynomial();
    std::vector<C> d(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) {
      d[i - 1] = c_[i] * ring_traits<C>::from_rational(Rational(static_cast<long>(i)));
    }
    return Polynomial(std::move(d));
  }

  /// Horner evaluation in any type that accepts C * X and C + X.
  template <class X>
  X evaluate(const X& x) const {
    X acc = X(ring_traits<C>::zero());
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
      acc = acc * x;
      acc = acc + X(*it);
    }
    return acc;
  }

  /// Maps every coefficient through f, producing a polynomial over another ring.
  template <class F>
  auto map_coeffs(F&& f) const -> Polynomial<decltype(f(std::declval<const C&>()))> {
    using D = decltype(f(std::declval<const C&>()));
    std::vector<D> out;
    out.reserve(c_.size());
    for (const auto& a : c_) out.push_back(f(a));
    return Polynomial<D>(std::move(out));
  }

  Polynomial& operator+=(const Polynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), ring_traits<C>::zero());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = c_[i] + o.c_[i];
    trim();
    return *this;
  }

  Polynomial& operator-=(const Polynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), ring_traits<C>::zero());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = c_[i] - o.c_[i];
    trim();
    return *this;
  }

  Polynomial& operator*=(const C& s) {
    for (auto& a : c_) a = a * s;
    trim();
    return *this;
  }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator-(Polynomial a) {
    for (auto& x : a.c_) x = -x;
    return a;
  }
  friend Polynomial operator*(Polynomial a, const C& s) { return a *= s; }
  friend Polynomial operator*(const C& s, Polynomial a) { return a *= s; }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return Polynomial();
    std::vector<C> out(a.c_.size() + b.c_.size() - 1, ring_traits<C>::zero());
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (ring_traits<C>::is_zero(a.c_[i])) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) {
        out[i + j] = out[i + j] + a.c_[i] * b.c_[j];
      }
    }
    return Polynomial(std::move(out));
  }

  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    if (a.c_.size() != b.c_.size()) return false;
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (!(a.c_[i] == b.c_[i])) return false;
    }
    return true;
  }
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

 private:
  void trim() {
    while (!c_.empty() && ring_traits<C>::is_zero(c_.back())) c_.pop_back();
  }

  std::vector<C> c_;
};

/// Polynomial in the deformation parameter with rational coefficients; the
/// coefficient ring of the generic-parameter polynomial family.
using LambdaScalar = Polynomial<Rational>;

/// Polynomial in y with rational coefficients (fixed rational parameter).
using QPoly = Polynomial<Rational>;

inline bool is_zero(const LambdaScalar& p) { return p.is_zero(); }

/// Exact value of a parameter polynomial at a rational point.
Rational evaluate_at(const LambdaScalar& p, const Rational& value);

/// Formats a parameter polynomial as e.g. "4 - 4*L" (ascending powers, L is the
/// parameter). Zero prints as "0".
std::string to_string(const LambdaScalar& p, std::string_view var = "L");

/// Inverse of to_string for parameter polynomials. Throws std::invalid_argument.
LambdaScalar parse_lambda_scalar(std::string_view text, std::string_view var = "L");

/// Euclidean division over Q. Throws std::domain_error on a zero divisor.
std::pair<QPoly, QPoly> divmod(const QPoly& num, const QPoly& den);

/// Monic greatest common divisor over Q (zero if both inputs are zero).
QPoly gcd(QPoly a, QPoly b);

/// Quotient of two parameter polynomials, kept reduced with a monic denominator.
class RationalFunction {
 public:
  RationalFunction() : num_(), den_(QPoly::constant(Rational(1))) {}
  RationalFunction(LambdaScalar num, LambdaScalar den);
  static RationalFunction constant(const Rational& q) {
    return RationalFunction(QPoly::constant(q), QPoly::constant(Rational(1)));
  }

  const LambdaScalar& numerator() const { return num_; }
  const LambdaScalar& denominator() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_constant() const { return num_.degree() <= 0 && den_.degree() == 0; }

  /// Value at a rational point; throws std::domain_error at a pole.
  Rational evaluate_at(const Rational& value) const;

  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ * b.den_ == b.num_ * a.den_;
  }

  std::string to_string(std::string_view var = "L") const;

 private:
  LambdaScalar num_;
  LambdaScalar den_;
};

}  // namespace lambda_osc
