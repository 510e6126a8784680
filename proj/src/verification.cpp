#include "lambda_osc/verification.hpp"

#include "lambda_osc/classical.hpp"
#include "lambda_osc/factorization.hpp"
#include "lambda_osc/hermite.hpp"
#include "lambda_osc/spectrum.hpp"
#include "lambda_osc/sturm_liouville.hpp"
#include "lambda_osc/wavefunction.hpp"

#include <algorithm>
#include <cmath>
#include <initializer_list>
#include <numbers>
#include <stdexcept>

namespace lambda_osc {

namespace {

using GPoly = Polynomial<LambdaScalar>;

// --- tabulated polynomial expressions -------------------------------------

const LambdaScalar kL = generic_lambda();

LambdaScalar num(long a, long b = 1) { return LambdaScalar::constant(make_rational(a, b)); }
LambdaScalar lin(long a, long b) { return num(a) + kL * make_rational(b); }

LambdaScalar product(std::initializer_list<LambdaScalar> factors) {
  LambdaScalar out = num(1);
  for (const auto& f : factors) out *= f;
  return out;
}

GPoly ypoly(std::initializer_list<LambdaScalar> coeffs) { return GPoly(std::vector<LambdaScalar>(coeffs)); }

GPoly bracket(int n) {
  const LambdaScalar Z = num(0);
  switch (n) {
    case 0: return ypoly({num(1)});
    case 1: return ypoly({Z, num(1)});
    case 2: return ypoly({num(-1), Z, product({num(2), lin(1, -1)})});
    case 3: return ypoly({Z, num(-3), Z, product({num(2), lin(1, -2)})});
    case 4:
      return ypoly({num(3), Z, product({num(-12), lin(1, -2)}), Z, product({num(4), lin(1, -2), lin(1, -3)})});
    case 5:
      return ypoly({Z, num(15), Z, product({num(-20), lin(1, -3)}), Z, product({num(4), lin(1, -3), lin(1, -4)})});
    case 6:
      return ypoly({num(-15), Z, product({num(90), lin(1, -3)}), Z, product({num(-60), lin(1, -3), lin(1, -4)}), Z,
                    product({num(8), lin(1, -3), lin(1, -4), lin(1, -5)})});
  }
  throw std::logic_error("no table entry");
}

// g_1 = g_2 = 1, g_3 = g_4 = 1 - L, g_5 = g_6 = (1 - L)(1 - 2L); H_n = 2^ceil(n/2) g_n bracket_n.
LambdaScalar g_constant(int n) {
  if (n <= 2) return num(1);
  if (n <= 4) return lin(1, -1);
  return product({lin(1, -1), lin(1, -2)});
}

GPoly generating_table(int n) {
  if (n == 0) return bracket(0);
  return bracket(n) * (num(1L << ((n + 1) / 2)) * g_constant(n));
}

LambdaScalar k_constant(int n) {
  switch (n) {
    case 0: return num(1);
    case 1: return lin(2, -1);
    case 2: return lin(2, -3);
    case 3: return product({lin(2, -3), lin(2, -5)});
    case 4: return product({lin(2, -5), lin(2, -7)});
    case 5: return product({lin(2, -5), lin(2, -7), lin(2, -9)});
    case 6: return product({lin(2, -7), lin(2, -9), lin(2, -11)});
  }
  throw std::logic_error("no table entry");
}

QPoly at(const GPoly& p, const Rational& lambda) {
  return p.map_coeffs([&](const LambdaScalar& c) { return evaluate_at(c, lambda); });
}

// Physicists' Hermite polynomials by their own recursion.
std::vector<QPoly> classical_hermite(int n_max) {
  std::vector<QPoly> h{QPoly::constant(Rational(1)), QPoly::monomial(Rational(2), 1)};
  for (int n = 1; n < n_max; ++n) h.push_back(QPoly::variable() * h[n] * Rational(2) - h[n - 1] * Rational(2 * n));
  h.resize(static_cast<std::size_t>(n_max) + 1);
  return h;
}

// --- helpers ----------------------------------------------------------------

CheckResult make(int criterion, std::string check, nlohmann::ordered_json params, double metric, double threshold) {
  CheckResult r;
  r.criterion = criterion;
  r.check = std::move(check);
  r.parameters = std::move(params);
  r.metric = metric;
  r.threshold = threshold;
  r.pass = std::isfinite(metric) && metric <= threshold;
  return r;
}

double closed_energy(long m, double lambda) { return m + 0.5 - 0.5 * static_cast<double>(m * m) * lambda; }

bool proportional(const QPoly& a, const QPoly& b) {
  if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
  if (a.degree() != b.degree()) return false;
  return a == b * Rational(a.leading() / b.leading());
}

// Deterministic battery of z^s Q functions for the operator identities.
std::vector<LadderFunction> battery(const Rational& lambda) {
  const std::vector<std::vector<long>> polys = {{1},           {0, 1},         {3, 0, -2},       {1, 2, 3},
                                                {0, -5, 0, 7},  {2, 0, 0, 0, 1}, {-1, 4, 0, -3, 2}, {7, -2},
                                                {0, 0, 0, 0, 0, 3}, {5, 1, -1, 1, -1, 1}};
  const Rational exponents[] = {Rational(0), Rational(1, 2), Rational(-3, 2), Rational(5, 7), Rational(-2)};
  std::vector<LadderFunction> out;
  for (std::size_t i = 0; i < polys.size(); ++i) {
    std::vector<Rational> c;
    for (std::size_t j = 0; j < polys[i].size(); ++j) c.push_back(make_rational(polys[i][j], 1 + static_cast<long>((i + j) % 3)));
    Rational s = sgn(lambda) == 0 ? make_rational(-1, 2 + static_cast<long>(i % 3)) : exponents[i % 5];
    out.emplace_back(lambda, s, QPoly(c));
  }
  return out;
}

std::string rat(const Rational& q) { return to_string(q); }

// --- criteria -----------------------------------------------------------------

std::vector<CheckResult> criterion1() {
  std::vector<CheckResult> out;
  auto family = generating_coeffs(6, kL);
  double mismatches = 0;
  for (int n = 0; n <= 6; ++n) {
    if (!(family[n].poly == generating_table(n))) ++mismatches;
  }
  out.push_back(make(1, "polynomial_tables.generating", {{"n_max", 6}, {"mode", "generic"}}, mismatches, 0));
  for (const Rational& L : {make_rational(1, 5), make_rational(-1, 5), make_rational(1, 3)}) {
    double bad = 0;
    for (int n = 0; n <= 6; ++n) {
      if (!(rodrigues(n, L).poly == at(bracket(n) * k_constant(n), L))) ++bad;
    }
    out.push_back(make(1, "polynomial_tables.rodrigues", {{"lambda", rat(L)}, {"n_max", 6}}, bad, 0));
  }
  return out;
}

std::vector<CheckResult> criterion2() {
  std::vector<CheckResult> out;
  const std::vector<std::pair<double, std::vector<double>>> cases = {
      {0.8, {0.5, 1.1}}, {0.4, {0.5, 1.3, 1.7}}, {0.3, {0.5, 1.35, 1.90, 2.15}}};
  for (const auto& [lambda, expected] : cases) {
    const auto t = energies(lambda, static_cast<long>(expected.size()) - 1);
    double err = 0.0;
    for (std::size_t m = 0; m < expected.size(); ++m) {
      err = std::max(err, std::fabs(t.levels[m].e - expected[m]));
      if (!t.levels[m].bound) err = std::numeric_limits<double>::infinity();
    }
    out.push_back(make(2, "spectrum.values", {{"lambda", lambda}, {"levels", expected.size()}}, err, 1e-12));
  }
  return out;
}

std::vector<CheckResult> criterion3() {
  std::vector<CheckResult> out;
  const std::vector<std::pair<Rational, long>> cases = {
      {make_rational(1), 1},     {make_rational(3, 2), 1},  {make_rational(5), 1},      {make_rational(1, 2), 2},
      {make_rational(3, 4), 2},  {make_rational(99, 100), 2}, {make_rational(1, 3), 3}, {make_rational(2, 5), 3},
      {make_rational(49, 100), 3}, {make_rational(1, 4), 4},  {make_rational(3, 10), 4}, {make_rational(33, 100), 4},
      {make_rational(3, 20), 7}};
  for (const auto& [L, expected] : cases) {
    const double diff = std::fabs(static_cast<double>(bound_count(L) - expected)) +
                        std::fabs(static_cast<double>(bound_count(to_double(L)) - expected));
    out.push_back(make(3, "bound_count", {{"lambda", rat(L)}, {"expected", expected}}, diff, 0));
  }
  return out;
}

std::vector<CheckResult> criterion4() {
  std::vector<CheckResult> out;
  for (double lambda : {-0.3, -0.1, 0.15, 0.3, 0.0}) {
    auto r = sl_checks(lambda, 1e-6, 6);
    for (auto& c : r) c.criterion = 4;
    out.insert(out.end(), r.begin(), r.end());
  }
  return out;
}

std::vector<CheckResult> criterion5() {
  std::vector<CheckResult> out;
  for (double lambda : {0.3, -0.3, 0.1, -0.1}) {
    const auto param = classify(lambda);
    long n = 9;
    if (param.max_bound_index) n = std::min<long>(n, *param.max_bound_index + 1);
    const auto g = gram_matrix(lambda, n, true);
    double off = 0.0, diag = 0.0;
    for (long i = 0; i < n; ++i) {
      for (long j = 0; j < n; ++j) {
        if (i == j) {
          diag = std::max(diag, std::fabs(g[i][j] - 1.0));
        } else {
          off = std::max(off, std::fabs(g[i][j]));
        }
      }
    }
    out.push_back(make(5, "gram.offdiagonal", {{"lambda", lambda}, {"m_max", n - 1}}, off, 1e-8));
    out.push_back(make(5, "gram.diagonal", {{"lambda", lambda}, {"m_max", n - 1}}, diag, 1e-8));
  }
  return out;
}

std::vector<CheckResult> criterion6() {
  std::vector<CheckResult> out;
  const std::vector<Rational> lambdas = {make_rational(1, 5), make_rational(-1, 5), make_rational(1, 10),
                                         make_rational(-3, 10), make_rational(3, 10), make_rational(0)};
  for (const Rational& L : lambdas) {
    const auto param = classify(L);
    double bad_states = 0, bad_energy = 0, bad_shape = 0;
    long checked = 0;
    for (long n = 0; n <= 8; ++n) {
      if (!param.is_bound(n)) continue;
      ++checked;
      const auto w = build_state(n, L);
      if (!proportional(w.poly(), generating_poly(static_cast<int>(n), L).poly)) ++bad_states;
    }
    const PhysicalParams<Rational> p{Rational(1), Rational(1), Rational(1), L};
    const auto sums = ladder_energies(p, 8);
    for (long n = 0; n <= 8; ++n) {
      if (!param.is_bound(n)) continue;
      const Rational closed = Rational(n) + make_rational(1, 2) - Rational(n * n) * L / 2;
      if (sums[n] + make_rational(1, 2) != closed) ++bad_energy;
    }
    const bool annihilated = apply(LadderOperator::at(LadderKind::A, L, 0), build_state(0, L).ladder_function()).is_zero();
    const auto a0 = LadderOperator::at(LadderKind::A, L, 0), ap0 = LadderOperator::at(LadderKind::A_plus, L, 0);
    const auto a1 = LadderOperator::at(LadderKind::A, L, 1), ap1 = LadderOperator::at(LadderKind::A_plus, L, 1);
    for (const auto& g : battery(L)) {
      if (!(compose(a0, ap0, g) - compose(ap1, a1, g) == g.scaled(chain_remainder(L, 1)))) ++bad_shape;
    }
    const nlohmann::ordered_json params = {{"lambda", rat(L)}, {"states", checked}};
    out.push_back(make(6, "ladder.state_proportional_to_H", params, bad_states, 0));
    out.push_back(make(6, "ladder.annihilation", {{"lambda", rat(L)}}, annihilated ? 0.0 : 1.0, 0));
    out.push_back(make(6, "ladder.energies_exact", params, bad_energy, 0));
    out.push_back(make(6, "ladder.shape_invariance", {{"lambda", rat(L)}, {"battery", 10}}, bad_shape, 0));
  }
  return out;
}

std::vector<CheckResult> criterion7() {
  std::vector<CheckResult> out;
  for (double lambda : {0.5, -0.5}) {
    const PhysicalParams<double> p{1.0, 1.0, 1.0, lambda};
    const Rational L = exact_from_double(lambda);
    const LadderFunction g(L, Rational(-1) / (2 * L), QPoly(std::vector<Rational>{Rational(3), Rational(1), Rational(2)}));
    double err = 0.0;
    for (int i = 0; i < 20; ++i) {
      const double x = -1.2 + 0.125 * i;
      const double closed = commutator(x, p);
      err = std::max(err, std::fabs(closed - commutator_by_composition(x, p, g)) / std::fabs(closed));
    }
    out.push_back(make(7, "commutator.closed_vs_composition", {{"lambda", lambda}, {"points", 20}}, err, 1e-10));
  }
  const PhysicalParams<double> p0{1.0, 1.3, 0.7, 0.0};
  const LadderFunction g0(Rational(0), make_rational(-1, 2), QPoly(std::vector<Rational>{Rational(1), Rational(1)}));
  double err = 0.0;
  for (int i = 0; i < 20; ++i) {
    const double x = -2.0 + 0.2 * i;
    const double hbar_alpha = p0.hbar * p0.alpha;
    err = std::max(err, std::fabs(commutator(x, p0) - hbar_alpha) / hbar_alpha);
    err = std::max(err, std::fabs(commutator_by_composition(x, p0, g0) - hbar_alpha) / hbar_alpha);
  }
  out.push_back(make(7, "commutator.lambda_zero_limit", {{"lambda", 0.0}, {"points", 20}}, err, 1e-10));
  return out;
}

std::vector<CheckResult> criterion8() {
  std::vector<CheckResult> out;
  for (double lambda : {0.3, -0.3, 0.1, -0.1, 0.15, 0.0}) {
    const auto param = classify(lambda);
    long m_max = 8;
    if (param.max_bound_index) m_max = std::min<long>(m_max, *param.max_bound_index);
    const double edge = lambda < 0 ? 0.98 / std::sqrt(-lambda) : 5.0;
    for (long m = 0; m <= m_max; ++m) {
      const WaveFunction w(m, lambda);
      double worst = 0.0;
      for (int i = 0; i < 50; ++i) {
        const double y = edge * (-1.0 + 2.0 * (i + 0.5) / 50.0);
        worst = std::max(worst, eigen_residual(w, energy(m, lambda), y).relative());
      }
      out.push_back(make(8, "eigen_residual", {{"lambda", lambda}, {"m", m}, {"points", 50}}, worst, 1e-9));
    }
  }
  return out;
}

std::vector<CheckResult> criterion9() {
  std::vector<CheckResult> out;
  for (double lambda : {0.5, -0.5, 0.1, -0.1}) {
    for (double A : {0.5, 1.0}) {
      const auto m = measure_period(1.0, lambda, A, 100, 10000);
      const double expected = 2.0 * std::numbers::pi * std::sqrt(1.0 + lambda * A * A);
      const nlohmann::ordered_json params = {{"lambda", lambda}, {"amplitude", A}, {"alpha", 1.0}, {"periods", 100}};
      out.push_back(make(9, "classical.period", params, std::fabs(m.period - expected) / expected, 1e-4));
      out.push_back(make(9, "classical.energy_drift", params, m.max_energy_drift, 1e-6));
    }
  }
  return out;
}

std::vector<CheckResult> criterion10() {
  std::vector<CheckResult> out;
  const auto hermite = classical_hermite(4);
  std::vector<double> grid;
  for (int i = 0; i <= 60; ++i) grid.push_back(-3.0 + 0.1 * i);
  for (double lambda : {1e-6, -1e-6}) {
    const Rational L = exact_from_double(lambda);
    double poly_err = 0.0, energy_err = 0.0, wave_err = 0.0;
    for (int m = 0; m <= 4; ++m) {
      const auto h = to_double_coeffs(hermite[m]);
      const auto p = to_double_coeffs(generating_poly(m, L).poly);
      const WaveFunction w(m, lambda);
      double num_p = 0.0, den_p = 0.0, num_w = 0.0, den_w = 0.0;
      for (double y : grid) {
        double hv = 0.0, pv = 0.0;
        for (std::size_t k = h.size(); k-- > 0;) hv = hv * y + h[k];
        for (std::size_t k = p.size(); k-- > 0;) pv = pv * y + p[k];
        const double oscillator = hv * std::exp(-0.5 * y * y);
        num_p = std::max(num_p, std::fabs(pv - hv));
        den_p = std::max(den_p, std::fabs(hv));
        num_w = std::max(num_w, std::fabs(w.evaluate(y) - oscillator));
        den_w = std::max(den_w, std::fabs(oscillator));
      }
      poly_err = std::max(poly_err, num_p / den_p);
      wave_err = std::max(wave_err, num_w / den_w);
      energy_err = std::max(energy_err, std::fabs(energy(m, lambda) - (m + 0.5)) / (m + 0.5));
    }
    const nlohmann::ordered_json params = {{"lambda", lambda}, {"m_max", 4}};
    out.push_back(make(10, "continuity.polynomials", params, poly_err, 1e-4));
    out.push_back(make(10, "continuity.energies", params, energy_err, 1e-4));
    out.push_back(make(10, "continuity.wavefunctions", params, wave_err, 1e-4));
  }
  return out;
}

}  // namespace

nlohmann::ordered_json to_json(const CheckResult& r) {
  nlohmann::ordered_json j;
  j["check"] = r.check;
  if (r.criterion > 0) j["criterion"] = r.criterion;
  j["parameters"] = r.parameters;
  j["metric"] = r.metric;
  j["threshold"] = r.threshold;
  j["pass"] = r.pass;
  return j;
}

nlohmann::ordered_json report_json(const std::vector<CheckResult>& results) {
  nlohmann::ordered_json checks = nlohmann::ordered_json::array();
  for (const auto& r : results) checks.push_back(to_json(r));
  nlohmann::ordered_json out;
  out["pass"] = all_pass(results);
  out["checks"] = std::move(checks);
  return out;
}

bool all_pass(const std::vector<CheckResult>& results) {
  return std::all_of(results.begin(), results.end(), [](const CheckResult& r) { return r.pass; });
}

std::vector<CheckResult> run_criterion(int k) {
  switch (k) {
    case 1: return criterion1();
    case 2: return criterion2();
    case 3: return criterion3();
    case 4: return criterion4();
    case 5: return criterion5();
    case 6: return criterion6();
    case 7: return criterion7();
    case 8: return criterion8();
    case 9: return criterion9();
    case 10: return criterion10();
  }
  throw std::invalid_argument("no acceptance criterion " + std::to_string(k));
}

std::vector<CheckResult> run_acceptance() {
  std::vector<CheckResult> out;
  for (int k = 1; k <= kCriterionCount; ++k) {
    auto r = run_criterion(k);
    out.insert(out.end(), r.begin(), r.end());
  }
  return out;
}

std::vector<CheckResult> sl_checks(double lambda, double tol, int m_max) {
  const auto param = classify(lambda);
  const int k = param.max_bound_index ? static_cast<int>(*param.max_bound_index) + 1 : m_max + 1;
  // Extrapolants are asked to agree an order of magnitude tighter than the
  // accuracy required of the values themselves.
  const SLRefinement r = refine(lambda, k, std::max(1e-8, 0.1 * tol));
  double err = 0.0, order = 0.0, nodes = 0.0;
  for (int m = 0; m < k; ++m) {
    err = std::max(err, std::fabs(r.values[m] - closed_energy(m, lambda)));
    order = std::max(order, std::fabs(r.order[m] - 2.0));
    nodes += std::abs(r.node_counts[m] - m);
  }
  const nlohmann::ordered_json params = {{"lambda", lambda}, {"levels", k}, {"half_width", r.half_width},
                                         {"grid", r.levels.back().n}};
  std::vector<CheckResult> out;
  out.push_back(make(0, "sl.eigenvalues", params, err, tol));
  out.push_back(make(0, "sl.order_deviation", params, order, 0.2));
  out.push_back(make(0, "sl.node_counts", params, nodes, 0));
  if (lambda > 0) {
    const double expected = static_cast<double>(k);
    out.push_back(make(0, "sl.below_threshold", params, std::fabs(r.below_threshold - expected), 0));
  }
  return out;
}

std::vector<CheckResult> route_equivalence_checks(int n_max, const std::vector<Rational>& lambdas, bool generic) {
  std::vector<CheckResult> out;
  for (const Rational& L : lambdas) {
    const auto gen = generating_coeffs(n_max, L);
    double bad = 0;
    for (int n = 0; n <= n_max; ++n) {
      const auto s = series_solution(n, L);
      if (!proportionality(s, gen[n])) ++bad;
      if (sgn(L) != 0 && !proportionality(rodrigues(n, L), gen[n])) ++bad;
    }
    out.push_back(make(0, "polys.route_equivalence", {{"lambda", rat(L)}, {"n_max", n_max}}, bad, 0));
  }
  if (generic) {
    const auto gen = generating_coeffs(n_max, kL);
    double bad = 0;
    for (int n = 0; n <= n_max; ++n) {
      if (!proportionality(series_solution(n, kL), gen[n])) ++bad;
    }
    out.push_back(make(0, "polys.route_equivalence_generic", {{"n_max", n_max}}, bad, 0));
  }
  return out;
}

}  // namespace lambda_osc
