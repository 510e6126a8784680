#pragma once

#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace lambda_osc {

enum class QuadratureScheme {
  gauss_legendre_theta,        ///< L < 0: y = sin(theta)/sqrt|L| over (-pi/2, pi/2)
  gauss_legendre_u_truncated,  ///< L > 0: y = sinh(sqrt(L) u)/sqrt(L), truncated at |u| = U
  gauss_legendre_gaussian,     ///< L = 0: plain y, truncated at |y| = U
};

std::string to_string(QuadratureScheme s);

struct QuadratureSpec {
  double lambda = 0.0;
  int nodes = 20;                    ///< Gauss-Legendre nodes per panel, >= 8
  double tol = 1e-12;                ///< relative to the integral of |f|
  std::optional<double> half_width;  ///< fixed truncation U; chosen from the tail otherwise
  /// Polynomial degree of f for integrands poly(y) * z^(-1/L); when given and
  /// L > 0, a degree >= 2/L is rejected as divergent before any sampling.
  std::optional<int> tail_degree;
  int max_panels = 8192;

  QuadratureScheme scheme() const;
};

struct QuadratureResult {
  double value = 0.0;
  double abs_value = 0.0;       ///< same rule applied to |f|
  double error_estimate = 0.0;  ///< difference of the last two panel doublings
  int panels = 0;               ///< panels per half interval
  double half_width = 0.0;      ///< interval half-width in the flattened variable
  QuadratureScheme scheme = QuadratureScheme::gauss_legendre_theta;
};

/// Panel doubling hit max_panels before two estimates agreed.
class QuadratureConvergenceError : public std::runtime_error {
 public:
  QuadratureConvergenceError(double last, double previous);
  double last;
  double previous;
};

/// The integrand does not decay in the L > 0 tail.
class DivergentIntegralError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using RealFunction = std::function<double(double)>;

/// Integral of f(y) dy / sqrt(1 + L y^2) over the domain of L.
QuadratureResult integrate_measure(const RealFunction& f, const QuadratureSpec& spec);

/// One composite rule with a fixed number of panels and a fixed half-width
/// (ignored for L < 0). No adaptivity; exposed for convergence studies.
double integrate_measure_fixed(const RealFunction& f, double lambda, int nodes, int panels, double half_width);

/// Truncation half-width the adaptive driver would pick for f.
double choose_half_width(const RealFunction& f, const QuadratureSpec& spec);

/// Symmetric Gauss-Legendre rule on [-1, 1]: nonnegative abscissae with
/// weights (the zero node, when present, carries its full weight).
struct GaussLegendreTable {
  std::vector<double> x;
  std::vector<double> w;
};

/// Cached per node count; safe to call from several threads.
const GaussLegendreTable& gauss_legendre(int nodes);

/// Sturm-Liouville weights p = z^(1/2 - 1/L), r = p / z. Requires L != 0.
struct SLWeights {
  double p;
  double r;
};
SLWeights sl_weights(double y, double lambda);

}  // namespace lambda_osc
