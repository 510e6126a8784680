#include "lambda_osc/quadrature.hpp"

#include <boost/math/special_functions/legendre.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <shared_mutex>

namespace lambda_osc {

std::string to_string(QuadratureScheme s) {
  switch (s) {
    case QuadratureScheme::gauss_legendre_theta: return "gauss_legendre_theta";
    case QuadratureScheme::gauss_legendre_u_truncated: return "gauss_legendre_u_truncated";
    case QuadratureScheme::gauss_legendre_gaussian: return "gauss_legendre_gaussian";
  }
  return "unknown";
}

QuadratureScheme QuadratureSpec::scheme() const {
  if (lambda < 0.0) return QuadratureScheme::gauss_legendre_theta;
  if (lambda > 0.0) return QuadratureScheme::gauss_legendre_u_truncated;
  return QuadratureScheme::gauss_legendre_gaussian;
}

QuadratureConvergenceError::QuadratureConvergenceError(double last_, double previous_)
    : std::runtime_error("quadrature did not converge: last estimates " + std::to_string(last_) + " and " +
                         std::to_string(previous_)),
      last(last_),
      previous(previous_) {}

const GaussLegendreTable& gauss_legendre(int nodes) {
  if (nodes < 8) throw std::invalid_argument("Gauss-Legendre rule needs at least 8 nodes");
  static std::shared_mutex mutex;
  static std::map<int, std::unique_ptr<const GaussLegendreTable>> cache;
  {
    std::shared_lock lock(mutex);
    auto it = cache.find(nodes);
    if (it != cache.end()) return *it->second;
  }
  auto table = std::make_unique<GaussLegendreTable>();
  table->x = boost::math::legendre_p_zeros<double>(nodes);
  for (double x : table->x) {
    const double dp = boost::math::legendre_p_prime(nodes, x);
    table->w.push_back(2.0 / ((1.0 - x * x) * dp * dp));
  }
  std::unique_lock lock(mutex);
  auto [it, inserted] = cache.emplace(nodes, std::move(table));
  return *it->second;
}

namespace {

// The integrand in the flattened variable, in which the measure is dt.
RealFunction flatten(const RealFunction& f, double lambda) {
  if (lambda < 0.0) {
    const double s = std::sqrt(-lambda);
    return [f, s](double theta) { return f(std::sin(theta) / s) / s; };
  }
  if (lambda > 0.0) {
    const double s = std::sqrt(lambda);
    return [f, s](double u) { return f(std::sinh(s * u) / s); };
  }
  return f;
}

struct Sum {
  double value = 0.0;
  double abs_value = 0.0;
};

// Composite rule on [-H, H]; values at t and -t are added before weighting
// so odd integrands cancel exactly.
Sum composite(const RealFunction& g, double H, const GaussLegendreTable& table, int panels) {
  Sum s;
  const double h = H / panels;
  for (int k = 0; k < panels; ++k) {
    const double c = (k + 0.5) * h;
    const double half = 0.5 * h;
    for (std::size_t i = 0; i < table.x.size(); ++i) {
      const double w = table.w[i] * half;
      if (table.x[i] == 0.0) {
        const double a = g(c), b = g(-c);
        s.value += w * (a + b);
        s.abs_value += w * (std::fabs(a) + std::fabs(b));
        continue;
      }
      for (double t : {c - half * table.x[i], c + half * table.x[i]}) {
        const double a = g(t), b = g(-t);
        s.value += w * (a + b);
        s.abs_value += w * (std::fabs(a) + std::fabs(b));
      }
    }
  }
  return s;
}

double max_abs_window(const RealFunction& g, double lo, double hi) {
  double m = 0.0;
  for (int j = 0; j <= 8; ++j) {
    const double t = lo + (hi - lo) * j / 8.0;
    const double a = std::fabs(g(t)) + std::fabs(g(-t));
    if (!std::isfinite(a)) return a;
    m = std::max(m, a);
  }
  return m;
}

double max_half_width(double lambda) {
  // sinh(sqrt(L) u) overflows near sqrt(L) u = 710.
  return lambda > 0.0 ? 700.0 / std::sqrt(lambda) : 1e3;
}

}  // namespace

double integrate_measure_fixed(const RealFunction& f, double lambda, int nodes, int panels, double half_width) {
  if (panels < 1) throw std::invalid_argument("at least one panel required");
  const double H = lambda < 0.0 ? 0.5 * std::numbers::pi : half_width;
  if (!(H > 0.0)) throw std::invalid_argument("truncation half-width must be positive");
  return composite(flatten(f, lambda), H, gauss_legendre(nodes), panels).value;
}

double choose_half_width(const RealFunction& f, const QuadratureSpec& spec) {
  if (spec.lambda < 0.0) return 0.5 * std::numbers::pi;
  if (spec.half_width) {
    if (!(*spec.half_width > 0.0)) throw std::invalid_argument("truncation half-width must be positive");
    return *spec.half_width;
  }
  if (spec.lambda > 0.0 && spec.tail_degree && *spec.tail_degree >= 2.0 / spec.lambda) {
    throw DivergentIntegralError("integrand tail y^" + std::to_string(*spec.tail_degree) +
                                 " * z^(-1/L) does not decay in the flattened variable");
  }
  const RealFunction g = flatten(f, spec.lambda);
  const double u_max = max_half_width(spec.lambda);
  double U = spec.lambda > 0.0 ? std::min(8.0, 4.0 / std::sqrt(spec.lambda)) : 6.0;
  const GaussLegendreTable& table = gauss_legendre(spec.nodes);
  const double scale = std::max(composite(g, U, table, 16).abs_value, std::numeric_limits<double>::min());
  const double target = 0.1 * spec.tol * scale;
  for (int iter = 0; iter < 200; ++iter) {
    // The local decay rate grows outward for these integrands, so the rate
    // measured just inside U bounds the tail beyond it from above.
    const double w = std::max(0.05 * U, 0.25);
    const double outer = max_abs_window(g, U - w, U);
    const double inner = max_abs_window(g, U - 2.0 * w, U - w);
    if (!std::isfinite(outer) || !std::isfinite(inner)) {
      throw DivergentIntegralError("integrand is not finite in the tail");
    }
    if (outer == 0.0) return U;
    const double rate = std::log(inner / outer) / w;
    if (!(rate > 0.0)) {
      if (U >= u_max) throw DivergentIntegralError("integrand does not decay before the truncation cap");
      U = std::min(1.5 * U, u_max);
      continue;
    }
    const double tail = outer / rate;
    if (tail <= target) return U;
    if (U >= u_max) throw DivergentIntegralError("integrand tail exceeds tolerance at the truncation cap");
    const double step = std::log(tail / target) / rate;
    U = std::min(U + std::max(step, 0.05 * U), u_max);
  }
  throw DivergentIntegralError("tail truncation search did not settle");
}

QuadratureResult integrate_measure(const RealFunction& f, const QuadratureSpec& spec) {
  if (spec.nodes < 8) throw std::invalid_argument("quadrature needs at least 8 nodes per panel");
  if (!(spec.tol > 0.0)) throw std::invalid_argument("quadrature tolerance must be positive");
  QuadratureResult r;
  r.scheme = spec.scheme();
  r.half_width = choose_half_width(f, spec);
  const RealFunction g = flatten(f, spec.lambda);
  const GaussLegendreTable& table = gauss_legendre(spec.nodes);
  Sum previous = composite(g, r.half_width, table, 1);
  for (int panels = 2; panels <= spec.max_panels; panels *= 2) {
    const Sum current = composite(g, r.half_width, table, panels);
    const double diff = std::fabs(current.value - previous.value);
    if (panels >= 4 && diff <= spec.tol * current.abs_value) {
      r.value = current.value;
      r.abs_value = current.abs_value;
      r.error_estimate = diff;
      r.panels = panels;
      return r;
    }
    if (panels * 2 > spec.max_panels) throw QuadratureConvergenceError(current.value, previous.value);
    previous = current;
  }
  throw QuadratureConvergenceError(previous.value, previous.value);
}

SLWeights sl_weights(double y, double lambda) {
  if (lambda == 0.0) throw std::invalid_argument("sl_weights: L = 0 has no Sturm-Liouville weight of this form");
  const double z = 1.0 + lambda * y * y;
  if (!(z >= 0.0)) throw std::domain_error("sl_weights: y outside the domain");
  const double p = std::pow(z, 0.5 - 1.0 / lambda);
  return {p, p / z};
}

}  // namespace lambda_osc
