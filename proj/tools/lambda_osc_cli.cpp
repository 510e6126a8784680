#include "lambda_osc/classical.hpp"
#include "lambda_osc/factorization.hpp"
#include "lambda_osc/hermite.hpp"
#include "lambda_osc/io.hpp"
#include "lambda_osc/spectrum.hpp"
#include "lambda_osc/sturm_liouville.hpp"
#include "lambda_osc/verification.hpp"
#include "lambda_osc/wavefunction.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

using namespace lambda_osc;

namespace {

struct Globals {
  std::vector<std::string> lambdas;
  std::string format = "csv";
  std::string out;
  std::optional<double> tol;
  std::optional<long> seed;  // reserved: every subcommand is deterministic
  bool quiet = false;
};

struct Lambda {
  Rational exact;
  double value;
};

std::vector<Lambda> lambdas_or(const Globals& g, const std::vector<std::string>& defaults) {
  std::vector<Lambda> out;
  for (const auto& text : g.lambdas.empty() ? defaults : g.lambdas) {
    Rational q;
    try {
      q = parse_rational(text);
    } catch (const std::exception& e) {
      throw CLI::ValidationError("--lambda", "invalid value '" + text + "': " + e.what());
    }
    out.push_back({q, to_double(q)});
  }
  return out;
}

class Output {
 public:
  explicit Output(const Globals& g) : g_(g) {
    if (!g.out.empty()) {
      file_.open(g.out, std::ios::binary);
      if (!file_) throw std::runtime_error("cannot open output file " + g.out);
    }
  }
  std::ostream& stream() { return g_.out.empty() ? std::cout : file_; }

  void table(const Table& t) {
    if (g_.format == "json") {
      write_json(stream(), t.to_json());
    } else {
      write_csv(stream(), t);
    }
  }

 private:
  const Globals& g_;
  std::ofstream file_;
};

void note(const Globals& g, const std::string& msg) {
  if (!g.quiet) std::cerr << msg << '\n';
}

long default_mmax(double lambda, long fallback) {
  const auto p = classify(lambda);
  return p.max_bound_index ? *p.max_bound_index : fallback;
}

// --- spectrum ---------------------------------------------------------------

struct SpectrumOpts {
  std::optional<long> mmax;
  bool figure3 = false;
  bool figure4 = false;
  double step = 0.05;
};

int cmd_spectrum(const Globals& g, const SpectrumOpts& o) {
  Output out(g);
  if (o.figure3 || o.figure4) {
    Table t{{"series", "lambda", "kind", "m", "e", "bound"}, {}};
    const std::vector<double> ls = o.figure3 ? std::vector<double>{0.30, 0.15} : std::vector<double>{0.30, -0.30};
    for (double lambda : ls) {
      const std::string series = "lambda=" + format_double(lambda);
      const double m_end = lambda > 0 ? 1.0 / lambda : 6.0;
      const long steps = std::lround(m_end / o.step);
      for (long i = 0; i <= steps; ++i) {
        const double m = std::min(m_end, i * o.step);
        t.add({series, lambda, std::string("curve"), m, energy_continuous(m, lambda), std::string("")});
      }
      const auto table = energies(lambda, default_mmax(lambda, 6));
      for (const auto& lv : table.levels) {
        t.add({series, lambda, std::string("level"), static_cast<double>(lv.m), lv.e, lv.bound});
      }
    }
    if (o.figure4) {
      const long steps = std::lround(6.0 / o.step);
      for (long i = 0; i <= steps; ++i) {
        const double m = i * o.step;
        t.add({std::string("linear"), 0.0, std::string("curve"), m, m + 0.5, std::string("")});
      }
    }
    out.table(t);
    return 0;
  }
  Table t{{"lambda", "m", "e", "bound"}, {}};
  for (const auto& l : lambdas_or(g, {"0.8", "0.4", "0.3"})) {
    const auto table = energies(l.value, o.mmax ? *o.mmax : default_mmax(l.value, 5));
    for (const auto& lv : table.levels) t.add({l.value, lv.m, lv.e, lv.bound});
  }
  out.table(t);
  return 0;
}

// --- potential ----------------------------------------------------------------

struct PotentialOpts {
  double alpha = 1.0;
  int samples = 201;
  double xmax = 5.0;
};

int cmd_potential(const Globals& g, const PotentialOpts& o) {
  if (o.samples < 2) throw CLI::ValidationError("--samples", "need at least two samples");
  Output out(g);
  Table t{{"lambda", "x", "V", "asymptote"}, {}};
  for (const auto& l : lambdas_or(g, {"-2", "-1", "1", "2"})) {
    const double lambda = l.value;
    // Open interval for lambda < 0: the end points are excluded.
    const double edge = lambda < 0 ? 1.0 / std::sqrt(-lambda) : o.xmax;
    const Cell asym = lambda > 0 ? Cell(o.alpha * o.alpha / (2.0 * lambda)) : Cell(std::string(""));
    for (int i = 0; i < o.samples; ++i) {
      const double x = lambda < 0 ? edge * (-1.0 + 2.0 * (i + 1.0) / (o.samples + 1.0))
                                  : edge * (-1.0 + 2.0 * i / (o.samples - 1.0));
      const double v = 0.5 * o.alpha * o.alpha * x * x / (1.0 + lambda * x * x);
      t.add({lambda, x, v, asym});
    }
  }
  out.table(t);
  return 0;
}

// --- polys --------------------------------------------------------------------

struct PolysOpts {
  int nmax = 6;
  std::string norm = "generating";
  bool generic = false;
  bool ratios = false;
};

FixedPoly fixed_in_norm(int n, const Rational& lambda, const std::string& norm) {
  if (norm == "generating") return generating_poly(n, lambda);
  if (norm == "rodrigues") return rodrigues(n, lambda);
  if (norm == "series") return series_solution(n, lambda);
  throw CLI::ValidationError("--norm", "unknown normalization " + norm);
}

int cmd_polys(const Globals& g, const PolysOpts& o) {
  if (o.nmax < 0) throw CLI::ValidationError("--nmax", "must be nonnegative");
  Output out(g);
  if (o.ratios) {
    Table t{{"lambda", "n", "rodrigues_over_generating"}, {}};
    for (const auto& l : lambdas_or(g, {"1/5"})) {
      if (sgn(l.exact) == 0) throw CLI::ValidationError("--lambda", "the Rodrigues route needs L != 0");
      for (int n = 0; n <= o.nmax; ++n) {
        const auto c = proportionality(rodrigues(n, l.exact), generating_poly(n, l.exact));
        t.add({to_string(l.exact), static_cast<long>(n), c ? to_string(*c) : std::string("not proportional")});
      }
    }
    out.table(t);
    return 0;
  }
  nlohmann::ordered_json docs = nlohmann::ordered_json::array();
  Table t{{"lambda", "n", "normalization", "degree", "polynomial"}, {}};
  auto emit = [&](const auto& p, const std::string& lambda_text) {
    docs.push_back(nlohmann::ordered_json::parse(to_json(p).dump()));
    t.add({lambda_text, static_cast<long>(p.n), to_string(p.normalization), static_cast<long>(p.degree()), to_string(p)});
  };
  if (o.generic || g.lambdas.empty()) {
    const auto L = generic_lambda();
    for (int n = 0; n <= o.nmax; ++n) {
      if (o.norm == "generating") {
        emit(generating_poly(n, L), "generic");
      } else if (o.norm == "series") {
        emit(series_solution(n, L), "generic");
      } else {
        throw CLI::ValidationError("--norm", "generic mode supports generating and series only");
      }
    }
  } else {
    for (const auto& l : lambdas_or(g, {})) {
      for (int n = 0; n <= o.nmax; ++n) emit(fixed_in_norm(n, l.exact, o.norm), to_string(l.exact));
    }
  }
  if (g.format == "json") {
    write_json(out.stream(), docs);
  } else {
    write_csv(out.stream(), t);
  }
  return 0;
}

// --- wavefn -------------------------------------------------------------------

struct WavefnOpts {
  std::optional<long> mmax;
  int samples = 121;
  double ymax = 6.0;
  bool normalized = false;
};

int cmd_wavefn(const Globals& g, const WavefnOpts& o) {
  if (o.samples < 2) throw CLI::ValidationError("--samples", "need at least two samples");
  Output out(g);
  Table t{{"lambda", "m", "y", "psi"}, {}};
  for (const auto& l : lambdas_or(g, {"0.3"})) {
    const long mmax = o.mmax ? *o.mmax : default_mmax(l.value, 4);
    const double edge = l.value < 0 ? std::min(o.ymax, 1.0 / std::sqrt(-l.value)) : o.ymax;
    for (long m = 0; m <= mmax; ++m) {
      const WaveFunction w(m, l.exact);
      if (o.normalized && !w.bound()) throw CLI::ValidationError("--normalized", "state " + std::to_string(m) + " is not bound");
      for (int i = 0; i < o.samples; ++i) {
        double y = edge * (-1.0 + 2.0 * i / (o.samples - 1.0));
        if (!w.in_domain(y)) y = std::nextafter(y, 0.0);
        if (!w.in_domain(y)) continue;
        t.add({l.value, m, y, o.normalized ? w.evaluate_normalized(y) : w.evaluate(y)});
      }
    }
  }
  out.table(t);
  return 0;
}

// --- gram ---------------------------------------------------------------------

struct GramOpts {
  std::optional<long> n;
  bool raw = false;
};

int cmd_gram(const Globals& g, const GramOpts& o) {
  Output out(g);
  Table t{{"lambda", "i", "j", "value"}, {}};
  for (const auto& l : lambdas_or(g, {"0.3", "-0.3", "0.1", "-0.1"})) {
    const long n = o.n ? *o.n : std::min<long>(8, default_mmax(l.value, 8)) + 1;
    const auto m = gram_matrix(l.value, n, !o.raw, g.tol ? *g.tol : 1e-13);
    for (long i = 0; i < n; ++i) {
      for (long j = 0; j < n; ++j) t.add({l.value, i, j, m[i][j]});
    }
  }
  out.table(t);
  return 0;
}

// --- sl -----------------------------------------------------------------------

struct SlOpts {
  std::optional<int> k;
  bool convergence = false;
};

int cmd_sl(const Globals& g, const SlOpts& o) {
  Output out(g);
  const double tol = g.tol ? *g.tol : 1e-7;
  Table levels{{"lambda", "m", "value", "error", "order", "nodes", "closed_form", "below_threshold"}, {}};
  Table conv{{"lambda", "level", "n", "h", "m", "raw", "extrapolated", "error"}, {}};
  for (const auto& l : lambdas_or(g, {"-0.3", "-0.1", "0.15", "0.3", "0"})) {
    const int k = o.k ? *o.k : static_cast<int>(default_mmax(l.value, 6)) + 1;
    const auto r = refine(l.value, k, tol);
    for (int m = 0; m < k; ++m) {
      levels.add({l.value, static_cast<long>(m), r.values[m], r.error[m], r.order[m], static_cast<long>(r.node_counts[m]),
                  energy(m, l.value), r.values[m] < r.threshold});
    }
    for (std::size_t i = 0; i < r.levels.size(); ++i) {
      const auto& lv = r.levels[i];
      for (int m = 0; m < k; ++m) {
        conv.add({l.value, static_cast<long>(i), static_cast<long>(lv.n), lv.h, static_cast<long>(m), lv.raw[m],
                  lv.extrapolated.empty() ? Cell(std::string("")) : Cell(lv.extrapolated[m]),
                  lv.error.empty() ? Cell(std::string("")) : Cell(lv.error[m])});
      }
    }
  }
  out.table(o.convergence ? conv : levels);
  return 0;
}

// --- ladder -------------------------------------------------------------------

int cmd_ladder(const Globals& g, std::optional<long> nmax) {
  Output out(g);
  Table t{{"lambda", "n", "b_n", "remainder", "ladder_energy", "closed_energy", "proportional_to_H", "polynomial"}, {}};
  for (const auto& l : lambdas_or(g, {"1/5", "-1/5", "3/10", "0"})) {
    const long n_end = nmax ? *nmax : std::min<long>(8, default_mmax(l.value, 8));
    const PhysicalParams<Rational> p{Rational(1), Rational(1), Rational(1), l.exact};
    const auto sums = ladder_energies(p, n_end);
    for (long n = 0; n <= n_end; ++n) {
      const auto w = build_state(n, l.exact);
      const auto h = generating_poly(static_cast<int>(n), l.exact);
      const bool prop = proportionality(FixedPoly{static_cast<int>(n), Normalization::generating, l.exact, w.poly()}, h)
                            .has_value();
      const Rational e = sums[n] + make_rational(1, 2);
      t.add({to_string(l.exact), n, to_string(chain_b(l.exact, n)), n == 0 ? std::string("") : to_string(chain_remainder(l.exact, n)),
             to_string(e), format_double(energy(n, l.value)), prop, to_string(w.poly(), "y")});
    }
  }
  out.table(t);
  return 0;
}

// --- classical ----------------------------------------------------------------

struct ClassicalOpts {
  double alpha = 1.0;
  std::vector<double> amplitudes{0.5, 1.0};
  int periods = 100;
  int steps = 10000;
  bool trajectory = false;
  long stride = 100;
};

int cmd_classical(const Globals& g, const ClassicalOpts& o) {
  Output out(g);
  if (o.trajectory) {
    Table t{{"lambda", "amplitude", "t", "x", "v", "E"}, {}};
    for (const auto& l : lambdas_or(g, {"0.5"})) {
      for (double A : o.amplitudes) {
        const auto orbit = OrbitParams::from(o.alpha, l.value, A);
        const double h = orbit.period() / o.steps;
        for (const auto& s : integrate({A, 0.0, 0.0}, o.alpha, l.value, o.periods * orbit.period(), h, o.stride)) {
          t.add({l.value, A, s.t, s.x, s.v, energy(s, o.alpha, l.value)});
        }
      }
    }
    out.table(t);
    return 0;
  }
  Table t{{"lambda", "amplitude", "period", "expected", "relative_error", "energy_drift", "crossings"}, {}};
  for (const auto& l : lambdas_or(g, {"0.5", "-0.5", "0.1", "-0.1"})) {
    for (double A : o.amplitudes) {
      const auto m = measure_period(o.alpha, l.value, A, o.periods, o.steps);
      const double expected = OrbitParams::from(o.alpha, l.value, A).period();
      t.add({l.value, A, m.period, expected, std::fabs(m.period - expected) / expected, m.max_energy_drift,
             static_cast<long>(m.crossings)});
    }
  }
  out.table(t);
  return 0;
}

// --- verify -------------------------------------------------------------------

struct VerifyOpts {
  bool sl = false;
  std::optional<int> poly_nmax;
  bool generic = false;
  std::optional<int> criterion;
};

int cmd_verify(const Globals& g, const VerifyOpts& o) {
  std::vector<CheckResult> results;
  const bool selective = o.sl || o.poly_nmax || o.generic || o.criterion;
  if (o.criterion) {
    if (*o.criterion < 1 || *o.criterion > kCriterionCount) throw CLI::ValidationError("--criterion", "must be 1..10");
    results = run_criterion(*o.criterion);
  }
  if (o.sl) {
    for (const auto& l : lambdas_or(g, {"-0.3", "-0.1", "0.15", "0.3", "0"})) {
      auto r = sl_checks(l.value, g.tol ? *g.tol : 1e-6);
      results.insert(results.end(), r.begin(), r.end());
    }
  }
  if (o.poly_nmax || o.generic) {
    std::vector<Rational> ls;
    for (const auto& l : lambdas_or(g, {"1/10", "-1/10", "3/10", "-3/10", "1/7"})) ls.push_back(l.exact);
    auto r = route_equivalence_checks(o.poly_nmax ? *o.poly_nmax : 12, ls, o.generic);
    results.insert(results.end(), r.begin(), r.end());
  }
  if (!selective) {
    results = run_acceptance();
    std::vector<Rational> ls{make_rational(1, 10), make_rational(-1, 10), make_rational(3, 10), make_rational(-3, 10),
                             make_rational(1, 7)};
    auto r = route_equivalence_checks(12, ls, true);
    results.insert(results.end(), r.begin(), r.end());
  }
  Output out(g);
  write_json(out.stream(), report_json(results));
  long failed = 0;
  for (const auto& r : results) failed += r.pass ? 0 : 1;
  note(g, std::to_string(results.size() - failed) + "/" + std::to_string(results.size()) + " checks passed");
  return failed == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Lambda-deformed nonlinear oscillator: spectra, polynomials, wave functions and checks"};
  app.require_subcommand(1);
  Globals g;
  app.add_option("--lambda", g.lambdas, "deformation parameter(s); exact decimals or fractions such as 1/5")
      ->delimiter(',')
      ->allow_extra_args(false);
  app.add_option("--format", g.format, "output format")->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--out", g.out, "output file (stdout when omitted)");
  app.add_option("--tol", g.tol, "tolerance override")->check(CLI::PositiveNumber);
  app.add_option("--seed", g.seed, "reserved; all computations are deterministic");
  app.add_flag("--quiet", g.quiet, "suppress diagnostics on stderr");
  app.fallthrough();

  SpectrumOpts so;
  auto* spectrum = app.add_subcommand("spectrum", "energy levels e_m");
  spectrum->add_option("--mmax", so.mmax, "largest m");
  spectrum->add_flag("--figure3", so.figure3, "e(m) curves and bound points for L = 0.30, 0.15");
  spectrum->add_flag("--figure4", so.figure4, "e(m) curves for L = +-0.30 and the linear oscillator");
  spectrum->add_option("--step", so.step, "curve step in m")->check(CLI::PositiveNumber);

  PotentialOpts po;
  auto* potential = app.add_subcommand("potential", "V(x) = (1/2) alpha^2 x^2/(1 + lambda x^2) samples");
  potential->add_option("--alpha", po.alpha)->check(CLI::PositiveNumber);
  potential->add_option("--samples", po.samples);
  potential->add_option("--xmax", po.xmax, "half range for lambda >= 0")->check(CLI::PositiveNumber);

  PolysOpts yo;
  auto* polys = app.add_subcommand("polys", "deformed Hermite polynomials");
  polys->add_option("--nmax", yo.nmax);
  polys->add_option("--norm", yo.norm)->check(CLI::IsMember({"generating", "rodrigues", "series"}));
  polys->add_flag("--generic", yo.generic, "symbolic in L (default when no --lambda is given)");
  polys->add_flag("--ratios", yo.ratios, "Rodrigues / generating proportionality constants");

  WavefnOpts wo;
  auto* wavefn = app.add_subcommand("wavefn", "wave function samples");
  wavefn->add_option("--mmax", wo.mmax);
  wavefn->add_option("--samples", wo.samples);
  wavefn->add_option("--ymax", wo.ymax)->check(CLI::PositiveNumber);
  wavefn->add_flag("--normalized", wo.normalized);

  GramOpts go;
  auto* gram = app.add_subcommand("gram", "Gram matrices in the invariant measure");
  gram->add_option("--n", go.n, "matrix size");
  gram->add_flag("--raw", go.raw, "unnormalized overlaps");

  SlOpts lo;
  auto* sl = app.add_subcommand("sl", "finite-difference eigenvalues with Richardson extrapolation");
  sl->add_option("--k", lo.k, "number of levels");
  sl->add_flag("--convergence", lo.convergence, "per-level convergence table");

  std::optional<long> ladder_nmax;
  auto* ladder = app.add_subcommand("ladder", "states and energies from the ladder operators");
  ladder->add_option("--nmax", ladder_nmax);

  ClassicalOpts co;
  auto* classical = app.add_subcommand("classical", "classical trajectories and periods");
  classical->add_option("--alpha", co.alpha)->check(CLI::PositiveNumber);
  classical->add_option("--amplitude", co.amplitudes)->delimiter(',');
  classical->add_option("--periods", co.periods)->check(CLI::PositiveNumber);
  classical->add_option("--steps", co.steps, "steps per period")->check(CLI::PositiveNumber);
  classical->add_flag("--trajectory", co.trajectory, "emit (t, x, v, E) rows");
  classical->add_option("--stride", co.stride)->check(CLI::PositiveNumber);

  VerifyOpts vo;
  auto* verify = app.add_subcommand("verify", "run checks and write a JSON report");
  verify->add_flag("--sl", vo.sl, "Sturm-Liouville cross-validation only");
  verify->add_option("--poly-nmax", vo.poly_nmax, "route equivalence up to this n");
  verify->add_flag("--generic", vo.generic, "include the symbolic route equivalence");
  verify->add_option("--criterion", vo.criterion, "a single acceptance criterion");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*spectrum) return cmd_spectrum(g, so);
    if (*potential) return cmd_potential(g, po);
    if (*polys) return cmd_polys(g, yo);
    if (*wavefn) return cmd_wavefn(g, wo);
    if (*gram) return cmd_gram(g, go);
    if (*sl) return cmd_sl(g, lo);
    if (*ladder) return cmd_ladder(g, ladder_nmax);
    if (*classical) return cmd_classical(g, co);
    if (*verify) return cmd_verify(g, vo);
  } catch (const CLI::Error& e) {
    return app.exit(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
