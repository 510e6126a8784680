#pragma once

#include "lambda_osc/polynomial.hpp"
#include "lambda_osc/rational.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <type_traits>
#include <vector>

namespace lambda_osc {

enum class Normalization { series_h1, series_h2, rodrigues, generating };
enum class Parity { even, odd };

std::string to_string(Normalization n);
Normalization parse_normalization(std::string_view text);

/// A deformed Hermite polynomial in y.
///
/// C is Rational (fixed parameter) or LambdaScalar (generic parameter, in
/// which case `lambda` holds the symbol L itself). `n` is the nominal index;
/// the true degree can be lower when the leading factor vanishes.
template <class C>
struct LambdaPoly {
  int n = 0;
  Normalization normalization = Normalization::generating;
  C lambda;
  Polynomial<C> poly;

  int degree() const { return poly.degree(); }
  Parity parity() const { return n % 2 == 0 ? Parity::even : Parity::odd; }

  /// All coefficients of powers with the wrong parity are exactly zero.
  bool parity_consistent() const;

  friend bool operator==(const LambdaPoly& a, const LambdaPoly& b) {
    return a.n == b.n && a.normalization == b.normalization && a.lambda == b.lambda && a.poly == b.poly;
  }
};

using FixedPoly = LambdaPoly<Rational>;
using GenericPoly = LambdaPoly<LambdaScalar>;

/// The parameter as a coefficient of the generic ring.
inline LambdaScalar generic_lambda() { return LambdaScalar::variable(); }

template <class C>
inline constexpr bool is_generic_v = std::is_same_v<C, LambdaScalar>;

/// Scalar type of exact ratios between two polynomials of the ring.
template <class C>
using ratio_t = std::conditional_t<is_generic_v<C>, RationalFunction, Rational>;

/// Power-series coefficients a_0..a_{count-1} of the ODE solution with
/// eigenvalue parameter 2e-1 = `two_e_minus_1`; even (a0=1) or odd (a1=1).
template <class C>
std::vector<C> series_coefficients(const C& two_e_minus_1, const C& lambda, int count, Parity parity);

/// Terminating series solution of degree p (a0 = 1 or a1 = 1).
template <class C>
LambdaPoly<C> series_solution(int p, const C& lambda);

/// (-1)^n z^(1/L+1/2) d^n/dy^n [z^n z^-(1/L+1/2)] for fixed rational L != 0.
/// Throws std::invalid_argument for L = 0.
FixedPoly rodrigues(int n, const Rational& lambda);

/// The single generating-function polynomial n! [t^n] (1 + L(2ty - t^2))^(1/L).
template <class C>
LambdaPoly<C> generating_poly(int n, const C& lambda);

template <class C>
std::vector<LambdaPoly<C>> generating_coeffs(int n_max, const C& lambda);

/// H_{n+1} = 2y(1 - nL) H_n - n(2 - (n-1)L) H_{n-1}. Throws std::invalid_argument
/// when the inputs are not consecutive generating-normalized polynomials.
template <class C>
LambdaPoly<C> three_term_next(const LambdaPoly<C>& hn, const LambdaPoly<C>& hnm1, int n);

/// Checks H'_{n+2} + (n+2)L[2y H'_{n+1} - (n+1)H'_n] = 2(n+2)H_{n+1} exactly.
/// `family[k]` must hold H_k; throws std::invalid_argument if it is too short.
template <class C>
bool derivative_relation_check(const std::vector<LambdaPoly<C>>& family, int n);

/// c with a = c*b, or empty. Throws std::invalid_argument on differing parameters.
template <class C>
std::optional<ratio_t<C>> proportionality(const LambdaPoly<C>& a, const LambdaPoly<C>& b);

/// prod_{r=m}^{2m-1} (2 - rL), the y^m coefficient of the Rodrigues polynomial.
template <class C>
C leading_coefficient(int m, const C& lambda);

/// (1 + L y^2) h'' + (L - 2) y h' + (2p - L p^2) h == 0 exactly.
template <class C>
bool satisfies_ode(const Polynomial<C>& h, int p, const C& lambda);

/// Rescales so the leading coefficient is positive at small positive L
/// (generic mode: the lowest-order nonzero term of the leading coefficient).
template <class C>
LambdaPoly<C> canonicalize_sign(LambdaPoly<C> p);

/// Substitutes a rational value for the generic parameter.
FixedPoly specialize(const GenericPoly& p, const Rational& lambda);

/// Coefficients rounded to nearest doubles.
std::vector<double> to_double_coeffs(const QPoly& p);

nlohmann::json to_json(const FixedPoly& p);
nlohmann::json to_json(const GenericPoly& p);
/// Throws std::invalid_argument on malformed documents or a mode mismatch.
FixedPoly fixed_poly_from_json(const nlohmann::json& j);
GenericPoly generic_poly_from_json(const nlohmann::json& j);

/// Human-readable form, e.g. "(-2) + (4 - 4*L)*y^2".
std::string to_string(const GenericPoly& p);
std::string to_string(const FixedPoly& p);

}  // namespace lambda_osc
