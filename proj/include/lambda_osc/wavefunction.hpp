#pragma once

#include "lambda_osc/ladder_function.hpp"
#include "lambda_osc/params.hpp"
#include "lambda_osc/polynomial.hpp"
#include "lambda_osc/quadrature.hpp"

#include <cmath>
#include <memory>
#include <mutex>
#include <optional>
#include <vector>

namespace lambda_osc {

/// Below this |L| the envelope is evaluated as exp(-y^2/2).
inline constexpr double kEnvelopeGaussianThreshold = 1e-8;

/// (1 + L y^2)^(-1/(2L)), or exp(-y^2/2) for |L| < 1e-8.
/// Throws std::domain_error outside the open domain.
double envelope(double y, double lambda);

/// Psi_m(y) = H_m(y) (1 + L y^2)^(-1/(2L)), H_m in the generating normalization
/// unless another polynomial factor is supplied.
class WaveFunction {
 public:
  /// The double is converted to its exact binary rational value for the
  /// polynomial coefficients, which are then rounded once.
  WaveFunction(long m, double lambda);
  WaveFunction(long m, const Rational& lambda);
  WaveFunction(long m, const Rational& lambda, QPoly poly);

  long m() const { return m_; }
  double lambda() const { return lambda_; }
  const Rational& exact_lambda() const { return exact_; }
  const QPoly& poly() const { return poly_; }
  const std::vector<double>& coeffs() const { return coeffs_; }
  const DeformationParam& deformation() const { return param_; }

  /// -1/(2L); empty at L = 0.
  std::optional<double> envelope_exponent() const;

  bool in_domain(double y) const;
  bool bound() const { return param_.is_bound(m_); }

  /// Unnormalized value; throws std::domain_error outside the open domain.
  double evaluate(double y) const;
  double polynomial(double y) const;

  /// The same function as an exact member of the z^s Q family (Gaussian
  /// family at L = 0).
  LadderFunction ladder_function() const;

  /// <Psi, Psi>_mu, computed once and cached. Throws std::invalid_argument
  /// for an unbound state.
  double norm_squared() const;

  /// Value of the state scaled to unit norm.
  double evaluate_normalized(double y) const;

 private:
  struct NormCache {
    std::once_flag once;
    double value = 0.0;
  };

  long m_;
  double lambda_;
  Rational exact_;
  DeformationParam param_;
  QPoly poly_;
  std::vector<double> coeffs_;
  std::shared_ptr<NormCache> norm_ = std::make_shared<NormCache>();
};

/// Zeros of the polynomial factor inside the domain, ascending, bisected to
/// 1e-12. For bound states there are exactly m of them.
std::vector<double> nodes(const WaveFunction& w);

/// <Psi_1, Psi_2>_mu over the domain. Both states must share L and be bound.
double overlap(const WaveFunction& a, const WaveFunction& b, double tol = 1e-13);

/// Gram matrix of Psi_0..Psi_{n-1}, optionally normalized to unit diagonal.
std::vector<std::vector<double>> gram_matrix(double lambda, long n, bool normalized, double tol = 1e-13);

/// Terms of the adimensional eigen-equation at y:
/// -z Psi''/2 - L y Psi'/2 + (1 + L) y^2/(2z) Psi - e Psi.
struct EigenResidual {
  double residual;     ///< sum of the four terms
  double largest_term; ///< max |term|
  double relative() const { return largest_term == 0.0 ? 0.0 : std::fabs(residual) / largest_term; }
};
EigenResidual eigen_residual(const WaveFunction& w, double e, double y);

}  // namespace lambda_osc
