#include "lambda_osc/factorization.hpp"

#include "lambda_osc/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace lambda_osc {

namespace {

const Rational kHalf(1, 2);

QPoly y_times(const Rational& c) { return QPoly(std::vector<Rational>{Rational(0), c}); }
QPoly y2_times(const Rational& c) { return QPoly(std::vector<Rational>{Rational(0), Rational(0), c}); }

// sqrt(z) d/dy f
LadderFunction flat_derivative(const LadderFunction& f) { return f.derivative().times_z_power(kHalf); }

// b y / sqrt(z) f
LadderFunction superpotential_term(const LadderFunction& f, const Rational& b) {
  return f.times_poly(y_times(b)).times_z_power(Rational(-kHalf));
}

void require_lambda(const LadderOperator& op, const LadderFunction& f) {
  if (op.lambda != f.lambda()) throw std::invalid_argument("ladder operator and function have different parameters");
}

}  // namespace

LadderOperator LadderOperator::at(LadderKind kind, const Rational& lambda, long k) {
  return {kind, lambda, chain_b(lambda, k)};
}

double LadderOperator::alpha(const PhysicalParams<double>& p) const { return p.alpha * to_double(b); }

Rational chain_b(const Rational& lambda, long k) { return Rational(1 - Rational(k) * lambda); }

Rational chain_remainder(const Rational& lambda, long k) { return Rational(chain_b(lambda, k) + lambda / 2); }

LadderFunction apply(const LadderOperator& op, const LadderFunction& f) {
  require_lambda(op, f);
  const LadderFunction d = flat_derivative(f);
  const LadderFunction w = superpotential_term(f, op.b);
  return op.kind == LadderKind::A ? d + w : w - d;
}

LadderFunction compose(const LadderOperator& op1, const LadderOperator& op2, const LadderFunction& f) {
  return apply(op1, apply(op2, f)).scaled(kHalf);
}

LadderFunction kinetic(const LadderFunction& f) { return flat_derivative(flat_derivative(f)).scaled(Rational(-kHalf)); }

LadderFunction apply_u1(const LadderFunction& f, const Rational& b) {
  const Rational c = b * (b + f.lambda()) / 2;
  return f.times_poly(y2_times(c)).times_z_power(Rational(-1)) + f.scaled(Rational(-b / 2));
}

LadderFunction apply_u2(const LadderFunction& f, const Rational& b) {
  const Rational c = b * (b - f.lambda()) / 2;
  return f.times_poly(y2_times(c)).times_z_power(Rational(-1)) + f.scaled(Rational(b / 2));
}

LadderFunction h1(const LadderFunction& f, const Rational& b) { return kinetic(f) + apply_u1(f, b); }
LadderFunction h2(const LadderFunction& f, const Rational& b) { return kinetic(f) + apply_u2(f, b); }

LadderFunction hamiltonian(const LadderFunction& f) {
  const Rational c = (1 + f.lambda()) / 2;
  return kinetic(f) + f.times_poly(y2_times(c)).times_z_power(Rational(-1));
}

bool proposition2_check(const Rational& p, const LadderFunction& g) {
  const LadderFunction lhs = flat_derivative(g.times_z_power(Rational(-p))).times_z_power(p);
  const LadderFunction rhs = flat_derivative(g) - superpotential_term(g, Rational(2 * p * g.lambda()));
  return lhs == rhs;
}

LadderFunction chain_ground(const Rational& lambda, const Rational& b) {
  if (sgn(lambda) == 0) return LadderFunction::weight(lambda, Rational(-b / 2));
  return LadderFunction::weight(lambda, Rational(-b / (2 * lambda)));
}

LadderFunction ladder_chain(const Rational& lambda, long k, long n) {
  if (n < 0 || k < 0) throw std::invalid_argument("ladder chain indices must be nonnegative");
  LadderFunction f = chain_ground(lambda, chain_b(lambda, k + n));
  for (long j = k + n - 1; j >= k; --j) f = apply(LadderOperator::at(LadderKind::A_plus, lambda, j), f);
  return f;
}

WaveFunction build_state(long n, const Rational& lambda) {
  if (n < 0) throw std::invalid_argument("build_state: n must be nonnegative");
  if (!classify(lambda).is_bound(n)) throw std::invalid_argument("build_state: state " + std::to_string(n) + " is not bound");
  LadderFunction f = ladder_chain(lambda, 0, n);
  const Rational target = sgn(lambda) == 0 ? Rational(-kHalf) : Rational(-1 / (2 * lambda));
  if (f.exponent() != target) {
    const Rational gap = f.exponent() - target;
    if (gap.get_den() != 1 || sgn(gap) < 0) throw std::logic_error("ladder state left the envelope family");
    f = f.lowered(gap);
  }
  return WaveFunction(n, lambda, f.poly());
}

double commutator(double x, const PhysicalParams<double>& p) {
  const double z = 1.0 + p.lambda * x * x;
  if (!(z > 0.0)) throw std::domain_error("commutator: x outside the domain");
  return p.hbar * p.alpha / z;
}

double commutator_by_composition(double x, const PhysicalParams<double>& p, const LadderFunction& g) {
  const Rational lambda = exact_from_double(p.deformation());
  if (lambda != g.lambda()) throw std::invalid_argument("test function parameter does not match");
  const double y = AdimMap::from(p).to_y(x);
  const LadderOperator a{LadderKind::A, lambda, Rational(1)};
  const LadderOperator ap{LadderKind::A_plus, lambda, Rational(1)};
  const LadderFunction c = compose(a, ap, g) - compose(ap, a, g);
  return p.hbar * p.alpha * c.evaluate(y) / g.evaluate(y);
}

double PartnerPotentials::w(double x) const { return x / std::sqrt(1.0 + params.lambda * x * x); }

double PartnerPotentials::superpotential(double x) const {
  return params.alpha * std::sqrt(params.mass / 2.0) * w(x);
}

double PartnerPotentials::u1(double x) const {
  const double W = w(x);
  return 0.5 * params.mass * params.alpha * (params.alpha + params.hbar * params.lambda / params.mass) * W * W -
         0.5 * params.hbar * params.alpha;
}

double PartnerPotentials::u2(double x) const {
  const double W = w(x);
  return 0.5 * params.mass * params.alpha * (params.alpha - params.hbar * params.lambda / params.mass) * W * W +
         0.5 * params.hbar * params.alpha;
}

PartnerPotentials partner_potentials(const PhysicalParams<double>& p) {
  p.validate();
  return {p};
}

double adjointness_defect(const LadderFunction& f, const LadderFunction& g, const Rational& b, double tol) {
  const LadderFunction af = apply({LadderKind::A_plus, f.lambda(), b}, f);
  const LadderFunction ag = apply({LadderKind::A, g.lambda(), b}, g);
  QuadratureSpec spec;
  spec.lambda = to_double(f.lambda());
  spec.tol = tol;
  const double lhs = integrate_measure([&](double y) { return af.evaluate(y) * g.evaluate(y); }, spec).value;
  const double rhs = integrate_measure([&](double y) { return f.evaluate(y) * ag.evaluate(y); }, spec).value;
  return std::fabs(lhs - rhs) / std::max({std::fabs(lhs), std::fabs(rhs), 1e-300});
}

}  // namespace lambda_osc
