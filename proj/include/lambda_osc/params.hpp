#pragma once

#include "lambda_osc/rational.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

namespace lambda_osc {

enum class SignClass { negative, zero, positive };

std::string to_string(SignClass s);

/// Classified adimensional deformation parameter.
///
/// For negative values the motion lives on (-half_width, half_width); for
/// positive values only the states m <= max_bound_index are normalizable.
struct DeformationParam {
  double value = 0.0;
  std::optional<Rational> exact;        ///< set when classified from an exact rational
  SignClass sign_class = SignClass::zero;
  std::optional<double> half_width;     ///< 1/sqrt(|L|), negative values only
  std::optional<double> cutoff;         ///< 1/L, positive values only
  std::optional<long> max_bound_index;  ///< greatest integer strictly below 1/L

  bool finite_spectrum() const { return sign_class == SignClass::positive; }

  /// Number of normalizable states, empty when infinite.
  std::optional<long> bound_state_count() const {
    if (!max_bound_index) return std::nullopt;
    return *max_bound_index + 1;
  }

  bool is_bound(long m) const { return m >= 0 && (!max_bound_index || m <= *max_bound_index); }
};

/// Throws std::invalid_argument for NaN or infinite input.
///
/// A double whose reciprocal lies within a few ulps of an integer k is treated
/// as exactly 1/k, so classify(1.0/3) agrees with classify(Rational(1, 3)).
DeformationParam classify(double lambda);
DeformationParam classify(const Rational& lambda);

/// Power of y in the large-|y| norm integrand of state m: 2m - 1 - 2/L.
/// The state is normalizable iff this is < -1.
double normalizability_exponent(long m, double lambda);

/// Dimensional parameters of the oscillator. T is double or Rational.
template <class T>
struct PhysicalParams {
  T mass;
  T alpha;
  T hbar;
  T lambda;

  void validate() const {
    if (!(mass > T(0)) || !(alpha > T(0)) || !(hbar > T(0))) {
      throw std::invalid_argument("mass, alpha and hbar must be positive");
    }
  }

  /// m*alpha/hbar, inverse length squared.
  T beta() const { return T(mass * alpha / hbar); }

  /// Potential coupling m*alpha^2 + lambda*hbar*alpha of the quantum Hamiltonian.
  T coupling() const { return T(mass * alpha * alpha + lambda * hbar * alpha); }

  /// Adimensional deformation lambda*hbar/(m*alpha).
  T deformation() const { return T(lambda * hbar / (mass * alpha)); }
};

/// x = sqrt(hbar/(m alpha)) y, lambda = (m alpha/hbar) L.
struct AdimMap {
  double length_scale;  ///< sqrt(hbar/(m alpha))
  double deformation;   ///< L

  static AdimMap from(const PhysicalParams<double>& p);

  double to_y(double x) const { return x / length_scale; }
  double to_x(double y) const { return y * length_scale; }
};

/// Returns (y, L) for the physical coordinate x.
std::pair<double, double> to_adimensional(const PhysicalParams<double>& p, double x);

/// Inverse coordinate map.
double to_physical(const PhysicalParams<double>& p, double y);

}  // namespace lambda_osc
