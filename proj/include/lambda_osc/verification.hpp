#pragma once

#include "lambda_osc/rational.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace lambda_osc {

/// One line of a verification report; pass iff metric <= threshold.
struct CheckResult {
  int criterion = 0;  ///< acceptance criterion number, 0 for extra checks
  std::string check;
  nlohmann::ordered_json parameters;
  double metric = 0.0;
  double threshold = 0.0;
  bool pass = false;
};

nlohmann::ordered_json to_json(const CheckResult& r);
nlohmann::ordered_json report_json(const std::vector<CheckResult>& results);
bool all_pass(const std::vector<CheckResult>& results);

inline constexpr int kCriterionCount = 10;

/// Runs acceptance criterion k (1..10) at its stated tolerances.
std::vector<CheckResult> run_criterion(int k);

/// Criteria 1..10 in order.
std::vector<CheckResult> run_acceptance();

/// Refined Sturm-Liouville levels against the closed form for one L:
/// every bound level for L > 0, the lowest `m_max + 1` otherwise.
std::vector<CheckResult> sl_checks(double lambda, double tol = 1e-6, int m_max = 6);

/// Rodrigues, series and generating routes proportional for n <= n_max at
/// each L; with `generic`, also series vs generating over Q[L].
std::vector<CheckResult> route_equivalence_checks(int n_max, const std::vector<Rational>& lambdas, bool generic);

}  // namespace lambda_osc
