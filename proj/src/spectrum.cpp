#include "lambda_osc/spectrum.hpp"

#include <stdexcept>

namespace lambda_osc {

double energy(long m, double lambda) {
  const double md = static_cast<double>(m);
  return md + 0.5 - 0.5 * md * md * lambda;
}

Rational energy(long m, const Rational& lambda) {
  return Rational(m) + Rational(1, 2) - Rational(m * m, 2) * lambda;
}

double spacing(long m, double lambda) { return 1.0 - (static_cast<double>(m) + 0.5) * lambda; }

SpectrumTable energies(double lambda, long m_max) {
  if (m_max < 0) throw std::invalid_argument("energies: m_max must be nonnegative");
  const DeformationParam d = classify(lambda);
  SpectrumTable t;
  t.lambda = lambda;
  t.levels.reserve(static_cast<std::size_t>(m_max) + 1);
  for (long m = 0; m <= m_max; ++m) t.levels.push_back({m, energy(m, lambda), d.is_bound(m)});
  for (long m = 0; m < m_max; ++m) t.spacings.push_back(spacing(m, lambda));
  return t;
}

long bound_count(double lambda) {
  const DeformationParam d = classify(lambda);
  if (!d.finite_spectrum()) throw std::invalid_argument("bound_count: infinitely many bound states for L <= 0");
  return *d.bound_state_count();
}

long bound_count(const Rational& lambda) {
  const DeformationParam d = classify(lambda);
  if (!d.finite_spectrum()) throw std::invalid_argument("bound_count: infinitely many bound states for L <= 0");
  return *d.bound_state_count();
}

namespace {

template <class T>
std::vector<T> ladder_sum(const PhysicalParams<T>& p, long n_max) {
  if (n_max < 0) throw std::invalid_argument("ladder_energies: n_max must be nonnegative");
  p.validate();
  std::vector<T> e{T(0)};
  T acc(0);
  for (long k = 1; k <= n_max; ++k) {
    acc += remainder(p, chain_frequency(p, k));
    e.push_back(acc);
  }
  return e;
}

}  // namespace

std::vector<double> ladder_energies(const PhysicalParams<double>& p, long n_max) { return ladder_sum(p, n_max); }

std::vector<Rational> ladder_energies(const PhysicalParams<Rational>& p, long n_max) { return ladder_sum(p, n_max); }

}  // namespace lambda_osc
