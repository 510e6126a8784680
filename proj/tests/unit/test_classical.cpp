#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lambda_osc/classical.hpp"

#include <cmath>
#include <numbers>

using namespace lambda_osc;

TEST_CASE("energy routes agree") {
  CHECK(energy({0.0, 0.7, 0.0}, 1.3, 0.4) == doctest::Approx(0.245).epsilon(1e-15));
  for (double lambda : {0.5, -0.5, 0.0, 2.0}) {
    const double A = 0.6;
    CHECK(std::fabs(energy({A, 0.0, 0.0}, 1.0, lambda) - 0.5 * A * A / (1 + lambda * A * A)) < 1e-15);
    for (double x : {-0.5, 0.1, 0.6}) {
      for (double v : {-1.0, 0.3}) {
        const ClassicalState s{x, v, 0.0};
        CHECK(std::fabs(energy(s, 1.7, lambda) - lagrangian_energy(s, 1.7, lambda)) < 1e-14);
      }
    }
  }
  CHECK(std::fabs(energy({0.8, 0.3, 0.0}, 1.0, 0.0) - 0.5 * (0.09 + 0.64)) < 1e-15);
}

TEST_CASE("exact orbits satisfy the equation of motion") {
  for (double lambda : {0.5, -0.5, 0.1, -0.1, 3.0}) {
    for (double A : {0.5, 1.0}) {
      if (lambda * A * A <= -1) continue;
      const auto o = OrbitParams::from(1.3, lambda, A, 0.4);
      for (int i = 0; i < 100; ++i) CHECK(std::fabs(exact_residual(o, 1.3, lambda, 0.137 * i)) <= 1e-10);
    }
  }
  CHECK(OrbitParams::from(1.0, -0.5, 1.0).omega * OrbitParams::from(1.0, -0.5, 1.0).omega ==
        doctest::Approx(2.0).epsilon(1e-15));
  CHECK_THROWS_AS(OrbitParams::from(1.0, -1.0, 1.0), std::invalid_argument);
}

TEST_CASE("harmonic limit follows cos t") {
  const double h = 1e-3;
  auto traj = integrate({1.0, 0.0, 0.0}, 1.0, 0.0, 10.0, h, 100);
  for (const auto& s : traj) CHECK(std::fabs(s.x - std::cos(s.t)) < 10 * h * h);
  // Halving the step cuts the error by about four.
  auto coarse = integrate({1.0, 0.0, 0.0}, 1.0, 0.0, 10.0, 2 * h);
  auto fine = integrate({1.0, 0.0, 0.0}, 1.0, 0.0, 10.0, h);
  const double ec = std::fabs(coarse.back().x - std::cos(10.0)), ef = std::fabs(fine.back().x - std::cos(10.0));
  CHECK(ec / ef == doctest::Approx(4.0).epsilon(0.05));
}

TEST_CASE("symmetric step is time reversible") {
  const ClassicalState s{0.4, 0.9, 0.0};
  const auto f = step(s, 1.0, 0.5, 0.01);
  const auto b = step({f.x, -f.v, 0.0}, 1.0, 0.5, 0.01);
  CHECK(std::fabs(b.x - s.x) < 1e-15);
  CHECK(std::fabs(-b.v - s.v) < 1e-15);
}

TEST_CASE("amplitude-frequency law and energy drift") {
  for (double lambda : {0.5, -0.5, 0.1, -0.1}) {
    for (double A : {0.5, 1.0}) {
      const double expected = 2 * std::numbers::pi * std::sqrt(1 + lambda * A * A);
      const auto m = measure_period(1.0, lambda, A, 100, 10000);
      CHECK(std::fabs(m.period - expected) / expected <= 1e-4);
      CHECK(m.crossings >= 99);
      CHECK(m.max_energy_drift <= 1e-6);
    }
  }
}

TEST_CASE("domain exit for negative lambda") {
  // Exact orbits never reach |x| = 1/sqrt(0.5) (the energy diverges there);
  // a coarse step from near the edge overshoots it.
  try {
    integrate({1.3, 3.0, 0.0}, 1.0, -0.5, 10.0, 0.3);
    FAIL("expected a domain exit");
  } catch (const DomainExitError& e) {
    CHECK(e.time > 0.0);
    CHECK(e.time < 10.0);
  }
  CHECK_THROWS_AS(integrate({2.0, 0.0, 0.0}, 1.0, -0.5, 1.0, 1e-3), std::invalid_argument);
  CHECK_THROWS_AS(integrate({0.0, 0.0, 0.0}, 1.0, 0.5, 1.0, 0.0), std::invalid_argument);
}
