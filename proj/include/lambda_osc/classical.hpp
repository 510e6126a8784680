#pragma once

#include <stdexcept>
#include <vector>

namespace lambda_osc {

/// Unit mass throughout; the coupling g equals alpha^2.
struct ClassicalState {
  double x = 0.0;
  double v = 0.0;
  double t = 0.0;
};

/// x = A sin(omega t + phase) with omega^2 = alpha^2 / (1 + lambda A^2).
struct OrbitParams {
  double amplitude = 0.0;
  double omega = 0.0;
  double phase = 0.0;

  /// Throws std::invalid_argument unless lambda A^2 > -1 and alpha > 0.
  static OrbitParams from(double alpha, double lambda, double amplitude, double phase = 0.0);

  double period() const;
  double x(double t) const;
  double v(double t) const;
  double a(double t) const;
};

/// The trajectory left |x| < 1/sqrt|lambda| (lambda < 0).
class DomainExitError : public std::runtime_error {
 public:
  DomainExitError(double time, double x);
  double time;
  double x;
};

/// [lambda x v^2 - alpha^2 x] / (1 + lambda x^2).
double acceleration(double x, double v, double alpha, double lambda);

/// (1/2)(v^2 + alpha^2 x^2)/(1 + lambda x^2), written as P^2/2 + V with the
/// momentum P = sqrt(1 + lambda x^2) p_x and p_x = v/(1 + lambda x^2).
double energy(const ClassicalState& s, double alpha, double lambda);

/// v dL/dv - L from the Lagrangian (1/2)(v^2 - alpha^2 x^2)/(1 + lambda x^2).
double lagrangian_energy(const ClassicalState& s, double alpha, double lambda);

/// (1 + lambda x^2) x'' - lambda x x'^2 + alpha^2 x for the exact orbit at t.
double exact_residual(const OrbitParams& o, double alpha, double lambda, double t);

/// One symmetric step: half drift in x, implicit-midpoint kick in v (solved
/// in closed form, the acceleration being quadratic in v), half drift.
ClassicalState step(const ClassicalState& s, double alpha, double lambda, double h);

/// Fixed-step integration over [t0, t0 + T]; every `stride`-th state is kept
/// (the first and last always). Throws std::invalid_argument for h <= 0 or
/// an initial state outside the domain, DomainExitError on exit.
std::vector<ClassicalState> integrate(const ClassicalState& s0, double alpha, double lambda, double T, double h,
                                      long stride = 1);

struct PeriodMeasurement {
  double period = 0.0;
  int crossings = 0;
  double max_energy_drift = 0.0;  ///< max |E - E0| / |E0| along the run
};

/// Average spacing of upward zero crossings (linear interpolation) over
/// `periods` nominal periods of the exact orbit, with h = period/steps_per_period.
/// Starts from the turning point x = A, v = 0.
PeriodMeasurement measure_period(double alpha, double lambda, double amplitude, int periods = 60,
                                 int steps_per_period = 10000);

}  // namespace lambda_osc
