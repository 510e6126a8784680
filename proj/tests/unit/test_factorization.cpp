#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lambda_osc/factorization.hpp"
#include "lambda_osc/hermite.hpp"
#include "lambda_osc/spectrum.hpp"

#include <cmath>
#include <random>

using namespace lambda_osc;

namespace {

const Rational kLambdas[] = {Rational(1, 5), Rational(-1, 5), Rational(1, 3), Rational(0), Rational(3, 10), Rational(-7, 10)};

QPoly poly(std::vector<long> c) {
  std::vector<Rational> q;
  for (long v : c) q.emplace_back(v);
  return QPoly(q);
}

bool proportional(const QPoly& a, const QPoly& b) {
  if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
  if (a.degree() != b.degree()) return false;
  const Rational c = a.leading() / b.leading();
  return a == b * c;
}

// Ten functions z^s Q with assorted exponents and polynomials.
std::vector<LadderFunction> battery(const Rational& lambda) {
  std::mt19937 rng(20240611);
  std::uniform_int_distribution<long> coef(-9, 9);
  std::vector<LadderFunction> out;
  const Rational exponents[] = {Rational(0), Rational(1, 2), Rational(-3, 2), Rational(5, 7), Rational(-2)};
  for (int i = 0; i < 10; ++i) {
    std::vector<Rational> c;
    for (int j = 0; j <= 1 + i % 5; ++j) {
      c.emplace_back(coef(rng), 1 + (i + j) % 3);
      c.back().canonicalize();
    }
    if (sgn(c.back()) == 0) c.back() = Rational(1);
    Rational s = exponents[i % 5];
    if (sgn(lambda) == 0) s = Rational(-1, 2 + i % 3);
    out.emplace_back(lambda, s, QPoly(c));
  }
  return out;
}

// z^(p-1/2) [(b - 2Lp) y Q - z Q'], written out directly.
LadderFunction raise_oracle(const LadderFunction& f, const Rational& b) {
  const Rational& L = f.lambda();
  const QPoly y = QPoly::variable();
  const QPoly z = z_polynomial(L);
  if (sgn(L) == 0) return {L, f.exponent(), y * f.poly() * Rational(b - 2 * f.exponent()) - f.poly().derivative()};
  return {L, Rational(f.exponent() - Rational(1, 2)),
          y * f.poly() * Rational(b - 2 * L * f.exponent()) - z * f.poly().derivative()};
}

}  // namespace

TEST_CASE("A annihilates the chain ground states") {
  for (const auto& L : kLambdas) {
    for (long k = 0; k < 3; ++k) {
      const auto a = LadderOperator::at(LadderKind::A, L, k);
      CHECK(apply(a, chain_ground(L, chain_b(L, k))).is_zero());
    }
    // Annihilation of build_state(0).
    CHECK(apply(LadderOperator::at(LadderKind::A, L, 0), build_state(0, L).ladder_function()).is_zero());
  }
}

TEST_CASE("A+ matches the explicit formula, and A the sign-flipped one") {
  for (const auto& L : kLambdas) {
    for (const auto& f : battery(L)) {
      const Rational b = chain_b(L, 2);
      CHECK(apply({LadderKind::A_plus, L, b}, f) == raise_oracle(f, b));
      // A = -A+ with b -> -b.
      CHECK(apply({LadderKind::A, L, b}, f) == -raise_oracle(f, Rational(-b)));
    }
  }
}

TEST_CASE("first ladder step and the harmonic limit") {
  const Rational L(1, 5);
  const auto psi1 = apply(LadderOperator::at(LadderKind::A_plus, L, 0), chain_ground(L, chain_b(L, 1)));
  CHECK(psi1.exponent() == Rational(-5, 2));
  CHECK(proportional(psi1.poly(), QPoly::variable()));

  const Rational zero(0);
  const auto g = LadderFunction::weight(zero, Rational(-1, 2));
  const auto up = apply({LadderKind::A_plus, zero, Rational(1)}, g);
  CHECK(up == LadderFunction(zero, Rational(-1, 2), poly({0, 2})));
  const auto down = apply({LadderKind::A, zero, Rational(1)}, up);
  CHECK(down == LadderFunction(zero, Rational(-1, 2), poly({2})));
}

TEST_CASE("conjugated derivative identity on a battery") {
  CHECK(proposition2_check(Rational(0), LadderFunction(Rational(1, 3), Rational(0), poly({1, 2, 3}))));
  const Rational L(1, 5);
  const Rational b = chain_b(L, 1);
  CHECK(proposition2_check(Rational(b / (2 * L)), LadderFunction(L, Rational(0), poly({0, 0, 0, 1}))));
  CHECK(proposition2_check(Rational(1, 2), LadderFunction(Rational(1, 3), Rational(1), poly({1}))));
  for (const auto& Lb : kLambdas) {
    for (const auto& g : battery(Lb)) {
      for (const Rational p : {Rational(1, 2), Rational(-3, 4), Rational(2)}) CHECK(proposition2_check(p, g));
    }
  }
}

TEST_CASE("factorization identities on the battery") {
  for (const auto& L : kLambdas) {
    for (long k = 0; k < 3; ++k) {
      const Rational b = chain_b(L, k);
      const LadderOperator a{LadderKind::A, L, b}, ap{LadderKind::A_plus, L, b};
      for (const auto& g : battery(L)) {
        CHECK(compose(ap, a, g) == h1(g, b));
        CHECK(compose(a, ap, g) == h2(g, b));
      }
    }
  }
}

TEST_CASE("shape invariance holds exactly") {
  for (const auto& L : kLambdas) {
    for (long k = 0; k < 3; ++k) {
      const auto a0 = LadderOperator::at(LadderKind::A, L, k), ap0 = LadderOperator::at(LadderKind::A_plus, L, k);
      const auto a1 = LadderOperator::at(LadderKind::A, L, k + 1),
                 ap1 = LadderOperator::at(LadderKind::A_plus, L, k + 1);
      for (const auto& g : battery(L)) {
        CHECK(compose(a0, ap0, g) - compose(ap1, a1, g) == g.scaled(chain_remainder(L, k + 1)));
      }
    }
  }
}

TEST_CASE("Hamiltonian and its partners") {
  for (const auto& L : kLambdas) {
    for (const auto& g : battery(L)) {
      CHECK(hamiltonian(g) == h1(g, Rational(1)) + g.scaled(Rational(1, 2)));
      // H2 - 1/2 differs from H by -L y^2/z; the two agree only at L = 0.
      const auto shift = g.times_poly(QPoly(std::vector<Rational>{Rational(0), Rational(0), Rational(-L)})).times_z_power(Rational(-1));
      CHECK(h2(g, Rational(1)) - g.scaled(Rational(1, 2)) == hamiltonian(g) + shift);
    }
  }
}

TEST_CASE("ladder states reproduce the polynomial family") {
  for (const auto& L : {Rational(1, 5), Rational(-1, 5), Rational(0), Rational(1, 10), Rational(-1, 3)}) {
    for (long n = 0; n <= 8; ++n) {
      if (!classify(L).is_bound(n)) continue;
      const auto w = build_state(n, L);
      CHECK(proportional(w.poly(), generating_poly(static_cast<int>(n), L).poly));
      if (sgn(L) != 0) CHECK(w.ladder_function().exponent() == Rational(-1) / (2 * L));
    }
  }
  CHECK(proportional(build_state(2, Rational(3, 10)).poly(), poly({-10, 0, 14})));
  CHECK(proportional(build_state(3, Rational(1, 5)).poly(), rodrigues(3, Rational(1, 5)).poly));
  CHECK_THROWS_AS(build_state(4, Rational(3, 10)), std::invalid_argument);
  CHECK_THROWS_AS(build_state(-1, Rational(3, 10)), std::invalid_argument);
}

TEST_CASE("ladder energies") {
  for (const auto& L : {Rational(1, 5), Rational(-1, 5), Rational(0), Rational(3, 10)}) {
    PhysicalParams<Rational> p{Rational(1), Rational(1), Rational(1), L};
    const auto sums = ladder_energies(p, 3);
    for (long n = 0; n <= 3; ++n) {
      if (!classify(L).is_bound(n)) continue;
      const Rational e = Rational(n) + Rational(1, 2) - Rational(n * n) * L / 2;
      CHECK(sums[n] + Rational(1, 2) == e);
      const auto psi = build_state(n, L).ladder_function();
      CHECK(hamiltonian(psi) == psi.scaled(e));
      CHECK(h1(psi, Rational(1)) == psi.scaled(Rational(e - Rational(1, 2))));
      // Float-mode pointwise check.
      for (double y : {0.1, 0.7, 1.3}) {
        const double lhs = hamiltonian(psi).evaluate(y), rhs = to_double(e) * psi.evaluate(y);
        CHECK(std::fabs(lhs - rhs) <= 1e-10 * std::max(1.0, std::fabs(rhs)));
      }
    }
  }
}

TEST_CASE("commutator") {
  PhysicalParams<double> p{1.0, 1.0, 1.0, 1.0};
  CHECK(commutator(0.0, p) == 1.0);
  CHECK(std::fabs(commutator(1.0, p) - 0.5) < 1e-15);
  for (double lambda : {0.5, -0.5, 0.0}) {
    PhysicalParams<double> q{1.0, 1.0, 1.0, lambda};
    const Rational L = exact_from_double(lambda);
    const LadderFunction g(L, sgn(L) == 0 ? Rational(-1, 2) : Rational(-1) / (2 * L), poly({3, 1, 2}));
    for (int i = 0; i < 20; ++i) {
      const double x = -1.3 + 0.13 * i;
      const double closed = commutator(x, q), composed = commutator_by_composition(x, q, g);
      CHECK(std::fabs(closed - composed) <= 1e-10 * std::fabs(closed));
      if (lambda == 0.0) CHECK(std::fabs(closed - 1.0) < 1e-15);
    }
  }
  // Physical units: hbar alpha scale.
  PhysicalParams<double> r{2.0, 1.5, 0.5, 0.25};
  CHECK(std::fabs(commutator(0.0, r) - 0.75) < 1e-15);
}

TEST_CASE("partner potentials") {
  PhysicalParams<double> p{1.5, 0.8, 0.6, 0.4};
  const auto u = partner_potentials(p);
  CHECK(std::fabs(u.u1(0.0) + 0.5 * p.hbar * p.alpha) < 1e-15);
  CHECK(std::fabs(u.u2(0.0) - 0.5 * p.hbar * p.alpha) < 1e-15);
  CHECK(std::fabs(u.w(1e8) * u.w(1e8) - 1.0 / p.lambda) < 1e-6);
  for (double x : {-2.0, -0.3, 0.5, 1.7}) {
    const double ws = u.superpotential(x);
    CHECK(std::fabs(u.u2(x) - (2 * ws * ws - u.u1(x))) < 1e-13);
    // Riccati pair: U2 - U1 = sqrt(2/m) hbar sqrt(z) W_s'.
    const double h = 1e-5;
    const double dws = (u.superpotential(x + h) - u.superpotential(x - h)) / (2 * h);
    const double z = 1.0 + p.lambda * x * x;
    CHECK(std::fabs((u.u2(x) - u.u1(x)) - std::sqrt(2.0 / p.mass) * p.hbar * std::sqrt(z) * dws) < 1e-8);
  }
  PhysicalParams<double> h{1.0, 1.0, 1.0, 0.0};
  const auto hu = partner_potentials(h);
  CHECK(std::fabs(hu.u1(1.2) - (0.72 - 0.5)) < 1e-15);
  CHECK(std::fabs(hu.u2(1.2) - (0.72 + 0.5)) < 1e-15);
}

TEST_CASE("A+ is the adjoint of A in the invariant measure") {
  for (const auto& L : {Rational(3, 10), Rational(-3, 10), Rational(0)}) {
    const auto f = build_state(1, L).ladder_function();
    const auto g = build_state(2, L).ladder_function();
    CHECK(adjointness_defect(f, g, Rational(1)) < 1e-8);
    CHECK(adjointness_defect(g, build_state(0, L).ladder_function(), chain_b(L, 1)) < 1e-8);
  }
}
