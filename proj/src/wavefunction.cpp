#include "lambda_osc/wavefunction.hpp"

#include "lambda_osc/hermite.hpp"
#include "lambda_osc/numeric.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace lambda_osc {

double envelope(double y, double lambda) {
  if (std::fabs(lambda) < kEnvelopeGaussianThreshold) return std::exp(-0.5 * y * y);
  const double ly2 = lambda * y * y;
  if (!(ly2 > -1.0)) throw std::domain_error("envelope: y outside the domain 1 + L y^2 > 0");
  return std::exp(-std::log1p(ly2) / (2.0 * lambda));
}

WaveFunction::WaveFunction(long m, double lambda) : WaveFunction(m, exact_from_double(lambda)) {}

WaveFunction::WaveFunction(long m, const Rational& lambda)
    : WaveFunction(m, lambda, generating_poly(static_cast<int>(m), lambda).poly) {}

WaveFunction::WaveFunction(long m, const Rational& lambda, QPoly poly)
    : m_(m), lambda_(to_double(lambda)), exact_(lambda), param_(classify(lambda)), poly_(std::move(poly)) {
  if (m < 0) throw std::invalid_argument("wave function index must be nonnegative");
  coeffs_ = to_double_coeffs(poly_);
}

std::optional<double> WaveFunction::envelope_exponent() const {
  if (lambda_ == 0.0) return std::nullopt;
  return -0.5 / lambda_;
}

bool WaveFunction::in_domain(double y) const { return lambda_ >= 0.0 || lambda_ * y * y > -1.0; }

double WaveFunction::polynomial(double y) const { return horner_compensated(coeffs_, y); }

double WaveFunction::evaluate(double y) const {
  if (!in_domain(y)) throw std::domain_error("wave function evaluated outside the open domain");
  return polynomial(y) * envelope(y, lambda_);
}

LadderFunction WaveFunction::ladder_function() const {
  const Rational s = sgn(exact_) == 0 ? Rational(-1, 2) : Rational(-1 / (2 * exact_));
  return {exact_, s, poly_};
}

double WaveFunction::norm_squared() const {
  std::call_once(norm_->once, [this] { norm_->value = overlap(*this, *this); });
  return norm_->value;
}

double WaveFunction::evaluate_normalized(double y) const { return evaluate(y) / std::sqrt(norm_squared()); }

std::vector<double> nodes(const WaveFunction& w) {
  const auto& c = w.coeffs();
  std::vector<double> positive;
  if (c.empty()) return {};
  double R;
  if (w.lambda() < 0.0) {
    R = *w.deformation().half_width;
  } else {
    // Fujiwara bound on the moduli of the roots.
    R = 0.0;
    const std::size_t n = c.size() - 1;
    for (std::size_t k = 1; k <= n; ++k) {
      double r = std::pow(std::fabs(c[n - k] / c[n]), 1.0 / static_cast<double>(k));
      if (k == n) r *= std::pow(0.5, 1.0 / static_cast<double>(n));
      R = std::max(R, 2.0 * r);
    }
    R = std::max(R, 1.0);
  }
  const auto p = [&](double y) { return horner_compensated(c, y); };
  const long samples = 4000 * std::max<long>(w.m(), 1);
  double lo = 0.0;
  double plo = p(0.0);
  for (long i = 1; i <= samples; ++i) {
    const double hi = R * static_cast<double>(i) / static_cast<double>(samples);
    const double phi = p(hi);
    if (phi == 0.0) {
      positive.push_back(hi);
    } else if (lo > 0.0 && plo != 0.0 && std::signbit(plo) != std::signbit(phi)) {
      double a = lo, b = hi, pa = plo;
      for (int it = 0; it < 200 && b - a > 1e-12; ++it) {
        const double mid = 0.5 * (a + b);
        const double pm = p(mid);
        if (pm == 0.0) {
          a = b = mid;
          break;
        }
        if (std::signbit(pm) == std::signbit(pa)) {
          a = mid;
          pa = pm;
        } else {
          b = mid;
        }
      }
      positive.push_back(0.5 * (a + b));
    }
    lo = hi;
    plo = phi;
  }
  std::vector<double> out;
  for (auto it = positive.rbegin(); it != positive.rend(); ++it) out.push_back(-*it);
  if (w.poly().degree() >= 1 && sgn(w.poly().coeff(0)) == 0) out.push_back(0.0);
  out.insert(out.end(), positive.begin(), positive.end());
  return out;
}

double overlap(const WaveFunction& a, const WaveFunction& b, double tol) {
  if (a.lambda() != b.lambda()) throw std::invalid_argument("overlap: states with different parameters");
  if (!a.bound() || !b.bound()) throw std::invalid_argument("overlap: unbound state, the norm integral diverges");
  QuadratureSpec spec;
  spec.lambda = a.lambda();
  spec.tol = tol;
  spec.tail_degree = static_cast<int>(a.poly().degree() + b.poly().degree());
  const double lambda = a.lambda();
  auto f = [&](double y) {
    if (!a.in_domain(y)) return 0.0;
    const double e = envelope(y, lambda);
    return a.polynomial(y) * b.polynomial(y) * e * e;
  };
  return integrate_measure(f, spec).value;
}

std::vector<std::vector<double>> gram_matrix(double lambda, long n, bool normalized, double tol) {
  std::vector<WaveFunction> states;
  for (long m = 0; m < n; ++m) states.emplace_back(m, lambda);
  std::vector<std::vector<double>> g(static_cast<std::size_t>(n), std::vector<double>(static_cast<std::size_t>(n)));
  for (long i = 0; i < n; ++i) {
    for (long j = i; j < n; ++j) g[i][j] = g[j][i] = overlap(states[i], states[j], tol);
  }
  if (normalized) {
    std::vector<double> d(static_cast<std::size_t>(n));
    for (long i = 0; i < n; ++i) d[i] = std::sqrt(g[i][i]);
    for (long i = 0; i < n; ++i) {
      for (long j = 0; j < n; ++j) g[i][j] /= d[i] * d[j];
    }
  }
  return g;
}

EigenResidual eigen_residual(const WaveFunction& w, double e, double y) {
  if (!w.in_domain(y)) throw std::domain_error("residual evaluated outside the open domain");
  const LadderFunction f = w.ladder_function();
  const LadderFunction d1 = f.derivative();
  const LadderFunction d2 = d1.derivative();
  const double L = w.lambda();
  const double z = 1.0 + L * y * y;
  const double psi = f.evaluate(y);
  const double terms[4] = {-0.5 * z * d2.evaluate(y), -0.5 * L * y * d1.evaluate(y),
                           0.5 * (1.0 + L) * y * y / z * psi, -e * psi};
  EigenResidual r{0.0, 0.0};
  for (double t : terms) {
    r.residual += t;
    r.largest_term = std::max(r.largest_term, std::fabs(t));
  }
  return r;
}

}  // namespace lambda_osc
