#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lambda_osc/spectrum.hpp"

#include <cmath>

using namespace lambda_osc;

namespace {

void check_levels(double lambda, std::vector<double> expected) {
  auto t = energies(lambda, static_cast<long>(expected.size()) - 1);
  for (std::size_t m = 0; m < expected.size(); ++m) {
    CHECK(std::fabs(t.levels[m].e - expected[m]) <= 1e-12);
    CHECK(t.levels[m].bound);
  }
}

}  // namespace

TEST_CASE("tabulated positive-parameter levels") {
  check_levels(0.8, {0.5, 1.1});
  check_levels(0.4, {0.5, 1.3, 1.7});
  check_levels(0.3, {0.5, 1.35, 1.90, 2.15});
  auto t = energies(0.3, 6);
  CHECK_FALSE(t.levels[4].bound);
  CHECK_FALSE(t.levels[6].bound);
}

TEST_CASE("negative and zero parameter levels") {
  check_levels(-0.3, {0.5, 1.65, 3.1, 4.85});
  auto t = energies(0.0, 20);
  for (const auto& l : t.levels) CHECK(l.e == static_cast<double>(l.m) + 0.5);
  for (double lambda : {-0.7, -0.1, 0.0, 0.1, 0.9, 3.0}) CHECK(energy(0, lambda) == 0.5);
}

TEST_CASE("spacings") {
  for (double lambda : {-0.3, -0.05, 0.0, 0.15, 0.3}) {
    auto t = energies(lambda, 12);
    for (long m = 0; m < 12; ++m) {
      const double closed = lambda < 0 ? 1.0 + (m + 0.5) * std::fabs(lambda) : 1.0 - (m + 0.5) * lambda;
      CHECK(t.spacings[m] == doctest::Approx(closed).epsilon(1e-14));
      CHECK(t.spacings[m] == doctest::Approx(t.levels[m + 1].e - t.levels[m].e).epsilon(1e-13));
    }
  }
}

TEST_CASE("bound counts") {
  CHECK(bound_count(0.8) == 2);
  CHECK(bound_count(1.5) == 1);
  CHECK(bound_count(1.0) == 1);
  CHECK(bound_count(0.15) == 7);
  CHECK(bound_count(0.5) == 2);
  CHECK(bound_count(make_rational(1, 3)) == 3);
  CHECK_THROWS_AS(bound_count(0.0), std::invalid_argument);
  CHECK_THROWS_AS(bound_count(-0.2), std::invalid_argument);
  // Counting by interval: 1/(n-1) > L >= 1/n gives n states.
  for (long n = 2; n <= 30; ++n) {
    CHECK(bound_count(make_rational(1, n)) == n);
    CHECK(bound_count(Rational(make_rational(1, n - 1) - make_rational(1, 1000000))) == n);
  }
}

TEST_CASE("exact energies") {
  CHECK(energy(3, make_rational(3, 10)) == make_rational(43, 20));
  CHECK(energy(2, make_rational(-3, 10)) == make_rational(31, 10));
}

TEST_CASE("monotonicity and ordering") {
  for (double lambda : {0.05, 0.1, 0.15, 0.3, 0.45}) {
    auto t = energies(lambda, bound_count(lambda) - 1);
    for (std::size_t m = 1; m < t.levels.size(); ++m) CHECK(t.levels[m].e > t.levels[m - 1].e);
  }
  for (long m = 1; m <= 25; ++m) {
    CHECK(energy(m, -0.3) > energy(m, 0.0));
    CHECK(energy(m, 0.0) > energy(m, 0.3));
  }
}

TEST_CASE("continuous extension peaks at 1/L") {
  for (double lambda : {0.15, 0.3, 0.4}) {
    double best_m = 0.0, best_e = -1e300;
    for (int i = 0; i <= 200000; ++i) {
      const double m = i * 1e-4;
      const double e = energy_continuous(m, lambda);
      if (e > best_e) {
        best_e = e;
        best_m = m;
      }
    }
    CHECK(best_m == doctest::Approx(1.0 / lambda).epsilon(1e-4));
  }
}

TEST_CASE("ladder sums reproduce the closed form") {
  // Term-by-term oracle with unit parameters: R(alpha_k) = (1 - 0.3k) + 0.15.
  PhysicalParams<double> unit{1.0, 1.0, 1.0, 0.3};
  auto e = ladder_energies(unit, 3);
  CHECK(e[0] == 0.0);
  double oracle = 0.0;
  for (int k = 1; k <= 3; ++k) oracle += (1.0 - 0.3 * k) + 0.15;
  CHECK(e[3] == doctest::Approx(oracle).epsilon(1e-15));
  CHECK(e[3] == doctest::Approx(1.65).epsilon(1e-15));

  for (const Rational& lambda : {make_rational(3, 10), make_rational(-3, 10), make_rational(1, 10),
                                 make_rational(-1, 10), make_rational(1, 20), Rational(0)}) {
    // Non-unit scales: m = 3/2, alpha = 2, hbar = 1/3, lambda chosen to give L.
    PhysicalParams<Rational> p{make_rational(3, 2), Rational(2), make_rational(1, 3), Rational(0)};
    p.lambda = lambda * p.mass * p.alpha / p.hbar;
    REQUIRE(p.deformation() == lambda);
    auto exact = ladder_energies(p, 20);
    const Rational unit_e = p.hbar * p.alpha;
    for (long n = 0; n <= 20; ++n) {
      CHECK(exact[n] + unit_e / 2 == energy(n, lambda) * unit_e);
    }

    PhysicalParams<double> pd{1.5, 2.0, 1.0 / 3.0, to_double(p.lambda)};
    auto approx = ladder_energies(pd, 20);
    const double ud = pd.hbar * pd.alpha;
    for (long n = 1; n <= 20; ++n) {
      const double closed = (energy(n, to_double(lambda)) - 0.5) * ud;
      CHECK(std::fabs(approx[n] - closed) <= 1e-12 * std::fabs(closed) + 1e-15);
    }
  }
  CHECK_THROWS_AS(ladder_energies(unit, -1), std::invalid_argument);
}
