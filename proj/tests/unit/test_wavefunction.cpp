#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lambda_osc/spectrum.hpp"
#include "lambda_osc/wavefunction.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <thread>

using namespace lambda_osc;

namespace {

double hermite(int n, double y) {
  double h0 = 1.0, h1 = 2.0 * y;
  if (n == 0) return h0;
  for (int k = 1; k < n; ++k) {
    const double h2 = 2.0 * y * h1 - 2.0 * k * h0;
    h0 = h1;
    h1 = h2;
  }
  return h1;
}

}  // namespace

TEST_CASE("envelope") {
  CHECK(envelope(0.0, 0.4) == 1.0);
  CHECK(envelope(0.0, -0.4) == 1.0);
  CHECK(envelope(2.0, 0.0) == doctest::Approx(std::exp(-2.0)).epsilon(1e-15));
  CHECK(envelope(1.0, 1.0) == doctest::Approx(std::pow(2.0, -0.5)).epsilon(1e-15));
  CHECK(envelope(1.5, 1e-9) == std::exp(-0.5 * 2.25));
  CHECK_THROWS_AS(envelope(2.0, -0.25), std::domain_error);
  // Continuity across the branch switch.
  CHECK(envelope(2.0, 1.01e-8) == doctest::Approx(envelope(2.0, 0.99e-8)).epsilon(1e-7));
}

TEST_CASE("point values") {
  CHECK(WaveFunction(0, 0.3).evaluate(0.0) == 1.0);
  CHECK(WaveFunction(0, -0.8).evaluate(0.0) == 1.0);
  CHECK(WaveFunction(1, 1e-9).evaluate(1.0) == doctest::Approx(2.0 * std::exp(-0.5)).epsilon(1e-8));
  WaveFunction w(2, -0.5);
  CHECK_THROWS_AS(w.evaluate(std::sqrt(2.0)), std::domain_error);
  CHECK_THROWS_AS(w.evaluate(-1.5), std::domain_error);
  CHECK(w.envelope_exponent().value() == doctest::Approx(1.0));
  CHECK_FALSE(WaveFunction(2, 0.0).envelope_exponent().has_value());
}

TEST_CASE("nodes") {
  CHECK(nodes(WaveFunction(0, 0.3)).empty());
  auto n1 = nodes(WaveFunction(1, 0.3));
  REQUIRE(n1.size() == 1);
  CHECK(n1[0] == 0.0);
  auto n2 = nodes(WaveFunction(2, 0.3));
  REQUIRE(n2.size() == 2);
  CHECK(n2[1] == doctest::Approx(1.0 / std::sqrt(1.4)).epsilon(1e-12));
  CHECK(n2[1] == doctest::Approx(0.845).epsilon(1e-3));
  auto half = nodes(WaveFunction(2, make_rational(-1, 2)));
  REQUIRE(half.size() == 2);
  CHECK(half[0] == doctest::Approx(-1.0 / std::sqrt(3.0)).epsilon(1e-12));
  CHECK(half[1] == doctest::Approx(1.0 / std::sqrt(3.0)).epsilon(1e-12));

  for (double lambda : {-0.9, -0.3, -0.1, 0.0, 0.05, 0.1, 0.15, 0.3}) {
    const long top = lambda > 0 ? std::min(bound_count(lambda) - 1, 12L) : 12L;
    for (long m = 0; m <= top; ++m) {
      WaveFunction w(m, lambda);
      auto z = nodes(w);
      INFO("L = " << lambda << ", m = " << m);
      REQUIRE(z.size() == static_cast<std::size_t>(m));
      for (std::size_t i = 0; i < z.size(); ++i) {
        CHECK(z[i] == doctest::Approx(-z[z.size() - 1 - i]).epsilon(1e-12));
        CHECK(w.in_domain(z[i]));
        if (i > 0) CHECK(z[i] > z[i - 1]);
      }
    }
  }
}

TEST_CASE("parity") {
  for (double lambda : {-0.3, 0.0, 0.3}) {
    for (long m = 0; m <= 3; ++m) {
      WaveFunction w(m, lambda);
      for (double y : {0.1, 0.7, 1.2}) {
        CHECK(w.evaluate(-y) == doctest::Approx((m % 2 ? -1.0 : 1.0) * w.evaluate(y)).epsilon(1e-15));
      }
    }
  }
}

TEST_CASE("overlaps") {
  CHECK(overlap(WaveFunction(0, 0.4), WaveFunction(1, 0.4)) == 0.0);
  CHECK(std::fabs(overlap(WaveFunction(0, -0.3), WaveFunction(2, -0.3))) <= 1e-10);
  // Dense trapezoid oracle in u for L = 1: psi_0^2 = z^-1, y = sinh u.
  double trap = 0.0;
  const double h = 1e-3;
  for (double u = -60.0; u <= 60.0; u += h) trap += h / (std::cosh(u) * std::cosh(u));
  const double norm = overlap(WaveFunction(0, 1.0), WaveFunction(0, 1.0));
  CHECK(norm > 0.0);
  CHECK(norm == doctest::Approx(trap).epsilon(1e-8));
  CHECK(overlap(WaveFunction(1, 0.2), WaveFunction(3, 0.2)) ==
        doctest::Approx(overlap(WaveFunction(3, 0.2), WaveFunction(1, 0.2))).epsilon(1e-14));
  CHECK_THROWS_AS(overlap(WaveFunction(4, 0.3), WaveFunction(0, 0.3)), std::invalid_argument);
  CHECK_THROWS_AS(overlap(WaveFunction(0, 0.3), WaveFunction(0, 0.2)), std::invalid_argument);
}

TEST_CASE("Gaussian limit of the norm") {
  // integral of H_m^2 exp(-y^2) = 2^m m! sqrt(pi)
  for (long m = 0; m <= 6; ++m) {
    const double expected = std::pow(2.0, m) * std::tgamma(m + 1.0) * std::sqrt(std::numbers::pi);
    CHECK(WaveFunction(m, 0.0).norm_squared() == doctest::Approx(expected).epsilon(1e-12));
  }
}

TEST_CASE("Gram matrices are diagonal") {
  for (double lambda : {-0.3, -0.1, 0.1, 0.3}) {
    const long n = lambda > 0 ? std::min(9L, bound_count(lambda)) : 9L;
    auto g = gram_matrix(lambda, n, true);
    for (long i = 0; i < n; ++i) {
      CHECK(g[i][i] == doctest::Approx(1.0).epsilon(1e-14));
      for (long j = 0; j < n; ++j) {
        if (i != j) CHECK(std::fabs(g[i][j]) <= 1e-8);
      }
    }
  }
}

TEST_CASE("normalization cache is shared and thread safe") {
  WaveFunction w(3, -0.2);
  double values[4];
  std::thread threads[4];
  for (int i = 0; i < 4; ++i) threads[i] = std::thread([&, i] { values[i] = w.norm_squared(); });
  for (auto& t : threads) t.join();
  for (double v : values) CHECK(v == values[0]);
  WaveFunction copy = w;
  CHECK(copy.norm_squared() == values[0]);
  CHECK(std::fabs(overlap(WaveFunction(3, -0.2), WaveFunction(3, -0.2)) - values[0]) <= 1e-12 * values[0]);
  double unit = 0.0;
  QuadratureSpec spec;
  spec.lambda = -0.2;
  unit = integrate_measure([&](double y) { return w.in_domain(y) ? std::pow(w.evaluate_normalized(y), 2) : 0.0; }, spec)
             .value;
  CHECK(unit == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("eigen-equation residual") {
  for (double lambda : {-0.5, -0.3, -0.1, 0.0, 0.1, 0.15, 0.3, 0.45}) {
    const long top = lambda > 0 ? bound_count(lambda) - 1 : 8;
    for (long m = 0; m <= top; ++m) {
      WaveFunction w(m, lambda);
      const double e = energy(m, lambda);
      const double ymax = lambda < 0 ? 0.999 / std::sqrt(-lambda) : 6.0;
      double worst = 0.0;
      for (int i = 0; i < 50; ++i) {
        const double y = -ymax + 2.0 * ymax * (i + 0.5) / 50.0;
        worst = std::max(worst, eigen_residual(w, e, y).relative());
      }
      INFO("L = " << lambda << ", m = " << m);
      CHECK(worst <= 1e-9);
      // A wrong energy must show up.
      CHECK(eigen_residual(w, e + 0.01, 0.3).relative() > 1e-4);
    }
  }
}

TEST_CASE("wall behaviour for negative parameters") {
  for (double lambda : {-0.3, -1.0}) {
    for (long m = 0; m <= 4; ++m) {
      WaveFunction w(m, lambda);
      const double a = 1.0 / std::sqrt(-lambda);
      double previous = std::fabs(w.evaluate(0.99 * a));
      for (int i = 1; i <= 100; ++i) {
        const double y = a * (0.99 + 0.01 * (1.0 - std::pow(10.0, -i / 10.0)));
        const double v = std::fabs(w.evaluate(y));
        CHECK(v <= previous);
        previous = v;
      }
      CHECK(previous < 1e-3 * std::fabs(w.evaluate(0.99 * a)));
    }
  }
}

TEST_CASE("continuity at L -> 0") {
  for (double lambda : {1e-6, -1e-6}) {
    for (int m = 0; m <= 4; ++m) {
      WaveFunction w(m, lambda);
      double scale = 0.0;
      for (double y = -3.0; y <= 3.0; y += 0.05) scale = std::max(scale, std::fabs(hermite(m, y) * std::exp(-0.5 * y * y)));
      for (double y = -3.0; y <= 3.0; y += 0.05) {
        const double ref = hermite(m, y) * std::exp(-0.5 * y * y);
        CHECK(std::fabs(w.evaluate(y) - ref) <= 1e-4 * scale);
      }
    }
  }
}
