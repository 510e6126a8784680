#include "lambda_osc/classical.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <string>

namespace lambda_osc {

namespace {

bool in_domain(double x, double lambda) { return 1.0 + lambda * x * x > 0.0; }

std::string exit_message(double time, double x) {
  std::ostringstream m;
  m << "trajectory left the domain at t = " << time << " (x = " << x << ")";
  return m.str();
}

}  // namespace

DomainExitError::DomainExitError(double time_, double x_) : std::runtime_error(exit_message(time_, x_)), time(time_), x(x_) {}

OrbitParams OrbitParams::from(double alpha, double lambda, double amplitude, double phase) {
  if (!(alpha > 0.0)) throw std::invalid_argument("alpha must be positive");
  const double s = 1.0 + lambda * amplitude * amplitude;
  if (!(s > 0.0)) throw std::invalid_argument("amplitude outside the domain: lambda A^2 <= -1");
  return {amplitude, alpha / std::sqrt(s), phase};
}

double OrbitParams::period() const { return 2.0 * std::numbers::pi / omega; }
double OrbitParams::x(double t) const { return amplitude * std::sin(omega * t + phase); }
double OrbitParams::v(double t) const { return amplitude * omega * std::cos(omega * t + phase); }
double OrbitParams::a(double t) const { return -amplitude * omega * omega * std::sin(omega * t + phase); }

double acceleration(double x, double v, double alpha, double lambda) {
  return (lambda * x * v * v - alpha * alpha * x) / (1.0 + lambda * x * x);
}

double energy(const ClassicalState& s, double alpha, double lambda) {
  const double z = 1.0 + lambda * s.x * s.x;
  const double px = s.v / z;
  const double P = std::sqrt(z) * px;
  return 0.5 * P * P + 0.5 * alpha * alpha * s.x * s.x / z;
}

double lagrangian_energy(const ClassicalState& s, double alpha, double lambda) {
  const double z = 1.0 + lambda * s.x * s.x;
  const double L = 0.5 * (s.v * s.v - alpha * alpha * s.x * s.x) / z;
  const double dLdv = s.v / z;
  return s.v * dLdv - L;
}

double exact_residual(const OrbitParams& o, double alpha, double lambda, double t) {
  const double x = o.x(t), v = o.v(t), a = o.a(t);
  return (1.0 + lambda * x * x) * a - lambda * x * v * v + alpha * alpha * x;
}

ClassicalState step(const ClassicalState& s, double alpha, double lambda, double h) {
  const double xm = s.x + 0.5 * h * s.v;
  if (!in_domain(xm, lambda)) throw DomainExitError(s.t + 0.5 * h, xm);
  const double z = 1.0 + lambda * xm * xm;
  const double c = lambda * xm / z;
  const double d = alpha * alpha * xm / z;
  // v' = v + h (c w^2 - d), w = (v + v')/2.
  const double q = 2.0 * s.v - h * d;
  const double disc = 1.0 - h * c * q;
  if (!(disc >= 0.0)) throw std::runtime_error("step size too large for the velocity kick");
  const double w = q / (1.0 + std::sqrt(disc));
  const double v = 2.0 * w - s.v;
  const double x = xm + 0.5 * h * v;
  if (!in_domain(x, lambda)) throw DomainExitError(s.t + h, x);
  return {x, v, s.t + h};
}

std::vector<ClassicalState> integrate(const ClassicalState& s0, double alpha, double lambda, double T, double h,
                                      long stride) {
  if (!(h > 0.0)) throw std::invalid_argument("integrate: step must be positive");
  if (!(T >= 0.0)) throw std::invalid_argument("integrate: duration must be nonnegative");
  if (stride < 1) throw std::invalid_argument("integrate: stride must be positive");
  if (!in_domain(s0.x, lambda)) throw std::invalid_argument("integrate: initial state outside the domain");
  const long n = static_cast<long>(std::ceil(T / h - 1e-9));
  std::vector<ClassicalState> out;
  out.reserve(static_cast<std::size_t>(n / stride + 2));
  out.push_back(s0);
  ClassicalState s = s0;
  for (long i = 1; i <= n; ++i) {
    s = step(s, alpha, lambda, h);
    s.t = s0.t + i * h;
    if (i % stride == 0 || i == n) out.push_back(s);
  }
  return out;
}

PeriodMeasurement measure_period(double alpha, double lambda, double amplitude, int periods, int steps_per_period) {
  if (periods < 2 || steps_per_period < 10) throw std::invalid_argument("measure_period: too few periods or steps");
  const OrbitParams orbit = OrbitParams::from(alpha, lambda, amplitude);
  const double h = orbit.period() / steps_per_period;
  ClassicalState s{amplitude, 0.0, 0.0};
  const double e0 = energy(s, alpha, lambda);
  PeriodMeasurement out;
  double first = 0.0, last = 0.0;
  const long n = static_cast<long>(periods) * steps_per_period;
  for (long i = 1; i <= n; ++i) {
    const ClassicalState next = step(s, alpha, lambda, h);
    const double t1 = i * h;
    if (s.x < 0.0 && next.x >= 0.0) {
      const double tc = t1 - h + h * (-s.x) / (next.x - s.x);
      if (out.crossings == 0) first = tc;
      last = tc;
      ++out.crossings;
    }
    s = next;
    s.t = t1;
    out.max_energy_drift = std::max(out.max_energy_drift, std::fabs(energy(s, alpha, lambda) - e0) / std::fabs(e0));
  }
  if (out.crossings < 2) throw std::runtime_error("measure_period: fewer than two upward zero crossings");
  out.period = (last - first) / (out.crossings - 1);
  return out;
}

}  // namespace lambda_osc
