#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lambda_osc/sturm_liouville.hpp"

#include <chrono>
#include <cmath>
#include <numbers>

using namespace lambda_osc;

namespace {

// Closed-form levels, written out independently of the spectrum module.
double closed_form(int m, double lambda) { return m + 0.5 - 0.5 * m * m * lambda; }

}  // namespace

TEST_CASE("assembly and geometry") {
  CHECK_THROWS_AS(assemble(0.3, 10, 5.0), std::invalid_argument);
  CHECK_THROWS_AS(assemble(0.3, 100, 0.0), std::invalid_argument);
  auto d = assemble(-1.0, 127);
  CHECK(d.boundary == SLBoundary::dirichlet_at_walls);
  CHECK(std::fabs(d.half_width - std::numbers::pi / 2) < 1e-15);
  CHECK(std::fabs(d.u.front() + d.half_width - d.h) < 1e-14);
  CHECK(std::fabs(d.u[63]) < 1e-14);
  CHECK(std::fabs(continuum_threshold(0.3) - 1.3 / 0.6) < 1e-15);
  CHECK(std::isinf(continuum_threshold(-0.3)));
  CHECK(std::fabs(sl_potential(0.7, 0.0) - 0.245) < 1e-15);
  // V grows without bound at the walls and saturates for L > 0.
  CHECK(sl_potential(wall_position(-0.3) * 0.999, -0.3) > 1e4);
  CHECK(std::fabs(sl_potential(40.0, 0.3) - continuum_threshold(0.3)) < 1e-12);
  CHECK_THROWS_AS(wall_position(0.1), std::invalid_argument);
}

TEST_CASE("bisection agrees with QL on a small grid") {
  for (double lambda : {-0.3, 0.0, 0.3}) {
    auto d = assemble(lambda, 200, lambda < 0 ? 0.0 : 8.0);
    auto all = eigenvalues_ql(d);
    auto low = eigenvalues(d, 10);
    for (int j = 0; j < 10; ++j) CHECK(std::fabs(all[j] - low[j]) < 1e-9 * std::max(1.0, std::fabs(all[j])));
  }
}

TEST_CASE("harmonic limit") {
  auto r = refine(0.0, 3, 1e-7);
  for (int m = 0; m < 3; ++m) CHECK(std::fabs(r.values[m] - (m + 0.5)) < 1e-6);
  for (int m = 0; m < 3; ++m) CHECK(r.node_counts[m] == m);
}

TEST_CASE("negative parameter: walls, all levels bound") {
  auto r = refine(-0.3, 4, 1e-7);
  for (int m = 0; m < 4; ++m) {
    CHECK(std::fabs(r.values[m] - closed_form(m, -0.3)) < 1e-6);
    CHECK(r.node_counts[m] == m);
  }
  CHECK(r.below_threshold == 4);
  for (double p : r.order) CHECK((p > 1.8 && p < 2.2));
}

TEST_CASE("positive parameter: finite bound spectrum below the threshold") {
  auto r = refine(0.3, 4, 1e-6);
  const double expected[] = {0.5, 1.35, 1.90, 2.15};
  for (int m = 0; m < 4; ++m) CHECK(std::fabs(r.values[m] - expected[m]) < 1e-5);
  CHECK(r.below_threshold == 4);
  // floor(1/L) + 1 levels below threshold; asking for more yields continuum states.
  auto wide = refine(0.3, 6, 1e-5);
  CHECK(wide.below_threshold == 4);
  CHECK(wide.values[4] >= continuum_threshold(0.3) - 1e-4);
}

TEST_CASE("weak deformation keeps every bound level") {
  auto r = refine(0.15, 7, 1e-6);
  for (int m = 0; m < 7; ++m) {
    CHECK(std::fabs(r.values[m] - closed_form(m, 0.15)) < 1e-5);
    CHECK(r.node_counts[m] == m);
  }
  CHECK(r.below_threshold == 7);
}

TEST_CASE("truncation robustness: doubling U leaves bound levels unchanged") {
  const double U = choose_truncation(0.3, 4, 1e-6);
  SLRefineOptions wide;
  wide.half_width = 2.0 * U;
  auto a = refine(0.3, 4, 1e-6);
  auto b = refine(0.3, 4, 1e-6, wide);
  for (int m = 0; m < 4; ++m) CHECK(std::fabs(a.values[m] - b.values[m]) < 3e-6);
}

TEST_CASE("node counting ignores negligible entries") {
  CHECK(count_nodes({1.0, 0.5, -0.5, -1.0, 1e-12, -1e-12, -0.2}) == 1);
  CHECK(count_nodes({0.0, 1.0, -1.0, 1.0}) == 2);
}

TEST_CASE("error paths") {
  CHECK_THROWS_AS(refine(0.3, 4, 1e-9), std::invalid_argument);
  SLRefineOptions tiny;
  tiny.cap = 300;
  CHECK_THROWS_AS(refine(0.3, 4, 1e-8, tiny), SLEigenError);
}
