#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lambda_osc/params.hpp"

#include <cmath>
#include <limits>

using namespace lambda_osc;

namespace {

// Brute-force count of normalizable states: integrand power 2m - 1 - 2/L < -1,
// evaluated exactly for rational L.
long count_by_exponent(const Rational& lambda) {
  long m = 0;
  while (Rational(2 * m - 1) - 2 / lambda < -1) ++m;
  return m;
}

}  // namespace

TEST_CASE("classify positive values") {
  auto d = classify(0.3);
  CHECK(d.sign_class == SignClass::positive);
  CHECK(d.max_bound_index == 3);
  CHECK(d.bound_state_count() == 4);
  CHECK(d.cutoff.value() == doctest::Approx(1.0 / 0.3));
  CHECK_FALSE(d.half_width.has_value());

  CHECK(classify(0.5).max_bound_index == 1);
  CHECK(classify(make_rational(1, 2)).max_bound_index == 1);
  CHECK(classify(0.15).bound_state_count() == 7);
}

TEST_CASE("classify zero and negative values") {
  auto z = classify(0.0);
  CHECK(z.sign_class == SignClass::zero);
  CHECK_FALSE(z.max_bound_index.has_value());
  CHECK_FALSE(z.bound_state_count().has_value());
  CHECK(z.is_bound(1000));

  auto n = classify(-1.0);
  CHECK(n.sign_class == SignClass::negative);
  CHECK(n.half_width.value() == doctest::Approx(1.0));
  CHECK(classify(-0.25).half_width.value() == doctest::Approx(2.0));
}

TEST_CASE("classify rejects non-finite input") {
  CHECK_THROWS_AS(classify(std::numeric_limits<double>::quiet_NaN()), std::invalid_argument);
  CHECK_THROWS_AS(classify(std::numeric_limits<double>::infinity()), std::invalid_argument);
}

TEST_CASE("bound count agrees with the normalizability exponent") {
  for (long q = 1; q <= 40; ++q) {
    for (long p = 1; p <= 3 * q; ++p) {
      Rational lambda = make_rational(p, q);
      auto d = classify(lambda);
      INFO("L = " << to_string(lambda));
      CHECK(d.bound_state_count().value() == count_by_exponent(lambda));
      const long top = *d.max_bound_index;
      CHECK(normalizability_exponent(top, d.value) < -1.0);
      // For the first unbound state the exponent is >= -1 (exact at integer 1/L).
      CHECK(Rational(2 * (top + 1) - 1) - 2 / lambda >= -1);
    }
  }
}

TEST_CASE("double classification snaps reciprocal integers") {
  for (long k = 1; k <= 50; ++k) {
    const double lambda = 1.0 / static_cast<double>(k);
    CHECK(classify(lambda).max_bound_index == k - 1);
    CHECK(classify(make_rational(1, k)).max_bound_index == k - 1);
  }
}

TEST_CASE("bound count is nonincreasing and jumps at 1/k") {
  long previous = *classify(make_rational(1, 1000)).bound_state_count();
  for (int i = 2; i <= 4000; ++i) {
    Rational lambda = make_rational(i, 1000);
    long count = *classify(lambda).bound_state_count();
    CHECK(count <= previous);
    // A drop means an integer k with 1/k in (previous L, L] was crossed,
    // and the count right at L = 1/k is already the lower one.
    Rational prev_inv = make_rational(1000, i - 1);
    mpz_class k;
    mpz_cdiv_q(k.get_mpz_t(), lambda.get_den_mpz_t(), lambda.get_num_mpz_t());
    const bool crossed = Rational(k) < prev_inv;
    CHECK((count < previous) == crossed);
    if (crossed) CHECK(*classify(Rational(1 / Rational(k))).bound_state_count() == count);
    previous = count;
  }
}

TEST_CASE("adimensional map") {
  PhysicalParams<double> unit{1.0, 1.0, 1.0, 0.3};
  auto [y, L] = to_adimensional(unit, 2.0);
  CHECK(y == doctest::Approx(2.0));
  CHECK(L == doctest::Approx(0.3));

  PhysicalParams<double> p{2.0, 1.0, 1.0, 1.0};
  auto [y2, L2] = to_adimensional(p, 1.0);
  CHECK(y2 == doctest::Approx(std::sqrt(2.0)));
  CHECK(L2 == doctest::Approx(0.5));
  CHECK(to_adimensional(p, 0.0).first == 0.0);

  for (double x : {-3.7, -0.2, 0.0, 0.9, 12.5}) {
    CHECK(to_physical(p, to_adimensional(p, x).first) == doctest::Approx(x).epsilon(1e-15));
    const double lhs = 1.0 + p.lambda * x * x;
    const double yy = to_adimensional(p, x).first;
    CHECK(1.0 + L2 * yy * yy == doctest::Approx(lhs).epsilon(1e-14));
  }
}

TEST_CASE("exact parameters keep 1 + lambda x^2 = 1 + L y^2") {
  // With beta = m alpha / hbar a perfect square the map is rational.
  PhysicalParams<Rational> p{make_rational(4), make_rational(1), make_rational(1), make_rational(3, 7)};
  p.validate();
  const Rational beta = p.beta();
  CHECK(beta == 4);
  const Rational L = p.deformation();
  for (long i = -5; i <= 5; ++i) {
    Rational x = make_rational(i, 3);
    Rational y = x * 2;  // sqrt(beta) = 2
    CHECK(Rational(1 + p.lambda * x * x) == Rational(1 + L * y * y));
  }
  CHECK(p.coupling() == Rational(p.mass * p.alpha * (p.alpha + p.hbar * p.lambda / p.mass)));
}

TEST_CASE("invalid physical parameters") {
  PhysicalParams<double> bad{0.0, 1.0, 1.0, 0.1};
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
  PhysicalParams<double> neg{1.0, -1.0, 1.0, 0.1};
  CHECK_THROWS_AS(AdimMap::from(neg), std::invalid_argument);
}
