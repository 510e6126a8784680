#pragma once

#include "lambda_osc/ladder_function.hpp"
#include "lambda_osc/params.hpp"
#include "lambda_osc/wavefunction.hpp"

#include <functional>
#include <vector>

namespace lambda_osc {

/// Adimensional ladder operators on the z^s Q family, units sqrt(hbar alpha):
///   A(b)  = (1/sqrt2) [ sqrt(z) d/dy + b y/sqrt(z)]
///   A+(b) = (1/sqrt2) [-sqrt(z) d/dy + b y/sqrt(z)]
/// with b = b_k = 1 - k L along the chain. The 1/sqrt2 is kept out of the
/// exact representation: apply() returns sqrt2 * (op f), and the products
/// below carry the rational factor 1/2.
enum class LadderKind { A, A_plus };

struct LadderOperator {
  LadderKind kind = LadderKind::A;
  Rational lambda;
  Rational b{1};

  /// b_k = 1 - k L.
  static LadderOperator at(LadderKind kind, const Rational& lambda, long k);

  /// alpha_k for given physical parameters with this operator's L.
  double alpha(const PhysicalParams<double>& p) const;
};

/// sqrt2 * (op f), exact.
LadderFunction apply(const LadderOperator& op, const LadderFunction& f);

/// (op1 op2) f including the 1/2 from the two scale factors.
LadderFunction compose(const LadderOperator& op1, const LadderOperator& op2, const LadderFunction& f);

/// b_k = 1 - k L.
Rational chain_b(const Rational& lambda, long k);

/// R(alpha_k) / (hbar alpha) = b_k + L/2.
Rational chain_remainder(const Rational& lambda, long k);

/// -(1/2)(z f'' + L y f'), i.e. -(1/2)(sqrt z d/dy)^2 f.
LadderFunction kinetic(const LadderFunction& f);

/// U1 = (1/2) b(b+L) y^2/z - b/2 and U2 = (1/2) b(b-L) y^2/z + b/2, applied
/// multiplicatively.
LadderFunction apply_u1(const LadderFunction& f, const Rational& b);
LadderFunction apply_u2(const LadderFunction& f, const Rational& b);

/// H1(b) f = kinetic + U1, H2(b) f = kinetic + U2 (differential expressions).
LadderFunction h1(const LadderFunction& f, const Rational& b);
LadderFunction h2(const LadderFunction& f, const Rational& b);

/// The full adimensional Hamiltonian -(1/2)(z d^2 + L y d) + (1/2)(1+L) y^2/z.
LadderFunction hamiltonian(const LadderFunction& f);

/// z^p sqrt(z) d/dy (z^-p g) == -[-sqrt(z) d/dy + 2pL y/sqrt(z)] g, exactly.
bool proposition2_check(const Rational& p, const LadderFunction& g);

/// Ground state of A(b): z^(-b/(2L)), or exp(-b y^2/2) at L = 0.
LadderFunction chain_ground(const Rational& lambda, const Rational& b);

/// A+(b_k) A+(b_{k+1}) ... A+(b_{k+n-1}) on the ground state of b_{k+n},
/// without the (1/sqrt2)^n factor.
LadderFunction ladder_chain(const Rational& lambda, long k, long n);

/// The n-th state from the ladder (k = 0). Its exponent is -1/(2L) and the
/// polynomial factor is proportional to H_n. Throws std::invalid_argument for
/// n < 0 or an unbound n when L > 0.
WaveFunction build_state(long n, const Rational& lambda);

/// [A, A+] = hbar alpha / (1 + lambda x^2), closed form.
double commutator(double x, const PhysicalParams<double>& p);

/// [A, A+] g / g at x, by composing the exact operators on g (adimensional
/// L taken as the exact binary value of lambda hbar/(m alpha)).
double commutator_by_composition(double x, const PhysicalParams<double>& p, const LadderFunction& g);

/// Physical partner potentials and superpotential for the chain step alpha.
struct PartnerPotentials {
  PhysicalParams<double> params;

  double w(double x) const;             ///< x / sqrt(1 + lambda x^2)
  double superpotential(double x) const;  ///< alpha sqrt(m/2) W
  double u1(double x) const;
  double u2(double x) const;
};

PartnerPotentials partner_potentials(const PhysicalParams<double>& p);

/// <f, g> = integral of f g dy/sqrt(z); used for the weak adjointness check
/// <A+ f, g> = <f, A g>. Returns |lhs - rhs| / max(|lhs|, |rhs|, 1e-300).
double adjointness_defect(const LadderFunction& f, const LadderFunction& g, const Rational& b, double tol = 1e-12);

}  // namespace lambda_osc
