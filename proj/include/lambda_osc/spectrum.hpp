#pragma once

#include "lambda_osc/params.hpp"
#include "lambda_osc/rational.hpp"

#include <vector>

namespace lambda_osc {

/// Level m in units of hbar*alpha.
struct EnergyLevel {
  long m = 0;
  double e = 0.0;
  bool bound = true;
};

struct SpectrumTable {
  double lambda = 0.0;
  std::vector<EnergyLevel> levels;
  std::vector<double> spacings;  ///< spacings[m] = e_{m+1} - e_m
};

/// e_m = m + 1/2 - m^2 L / 2 (the same expression covers both signs of L).
double energy(long m, double lambda);
Rational energy(long m, const Rational& lambda);

/// e_{m+1} - e_m = 1 - (m + 1/2) L.
double spacing(long m, double lambda);

/// Levels 0..m_max. For L > 0 the levels beyond N_L are still listed, flagged
/// unbound. Throws std::invalid_argument for m_max < 0.
SpectrumTable energies(double lambda, long m_max);

/// N_L + 1 for L > 0; throws std::invalid_argument for L <= 0.
long bound_count(double lambda);
long bound_count(const Rational& lambda);

/// The continuous extension e(m) = m + 1/2 - m^2 L / 2.
inline double energy_continuous(double m, double lambda) { return m + 0.5 - 0.5 * m * m * lambda; }

/// Chain of frequencies alpha_k = alpha - (hbar lambda / m) k and remainders
/// R(alpha) = hbar alpha + hbar^2 lambda / (2m).
template <class T>
T chain_frequency(const PhysicalParams<T>& p, long k) {
  return T(p.alpha - p.hbar * p.lambda / p.mass * T(k));
}

template <class T>
T remainder(const PhysicalParams<T>& p, const T& alpha_k) {
  return T(p.hbar * alpha_k + p.hbar * p.hbar * p.lambda / (T(2) * p.mass));
}

/// E_0..E_{n_max} of the first partner Hamiltonian by summing R(alpha_k),
/// k = 1..n (physical units). Eigenvalues of the full Hamiltonian are these
/// plus hbar alpha / 2.
std::vector<double> ladder_energies(const PhysicalParams<double>& p, long n_max);
std::vector<Rational> ladder_energies(const PhysicalParams<Rational>& p, long n_max);

}  // namespace lambda_osc
