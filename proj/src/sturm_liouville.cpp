#include "lambda_osc/sturm_liouville.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <numbers>
#include <sstream>

namespace lambda_osc {

std::string to_string(SLBoundary b) {
  switch (b) {
    case SLBoundary::dirichlet_at_walls: return "dirichlet_at_walls";
    case SLBoundary::dirichlet_truncated: return "dirichlet_truncated";
    case SLBoundary::dirichlet_truncated_gaussian: return "dirichlet_truncated_gaussian";
  }
  return "unknown";
}

double sl_potential(double u, double lambda) {
  if (lambda > 0.0) {
    const double t = std::tanh(std::sqrt(lambda) * u);
    return 0.5 * (1.0 + lambda) / lambda * t * t;
  }
  if (lambda < 0.0) {
    const double a = -lambda;
    const double t = std::tan(std::sqrt(a) * u);
    return 0.5 * (1.0 - a) / a * t * t;
  }
  return 0.5 * u * u;
}

double continuum_threshold(double lambda) {
  if (lambda > 0.0) return 0.5 * (1.0 + lambda) / lambda;
  return std::numeric_limits<double>::infinity();
}

double wall_position(double lambda) {
  if (!(lambda < 0.0)) throw std::invalid_argument("walls exist only for L < 0");
  return 0.5 * std::numbers::pi / std::sqrt(-lambda);
}

SLDiscretization assemble(double lambda, int n, double half_width) {
  if (!std::isfinite(lambda)) throw std::invalid_argument("assemble: non-finite L");
  if (n < 64) throw std::invalid_argument("assemble: at least 64 interior nodes required");
  SLDiscretization d;
  d.lambda = lambda;
  d.n = n;
  if (lambda < 0.0) {
    d.half_width = wall_position(lambda);
    d.boundary = SLBoundary::dirichlet_at_walls;
  } else {
    if (!(half_width > 0.0)) throw std::invalid_argument("assemble: truncation half-width must be positive");
    d.half_width = half_width;
    d.boundary = lambda > 0.0 ? SLBoundary::dirichlet_truncated : SLBoundary::dirichlet_truncated_gaussian;
  }
  d.h = 2.0 * d.half_width / (n + 1);
  const double kin = 1.0 / (d.h * d.h);
  d.u.resize(n);
  d.diag.resize(n);
  d.off.assign(n - 1, -0.5 * kin);
  for (int i = 0; i < n; ++i) {
    d.u[i] = -d.half_width + (i + 1) * d.h;
    d.diag[i] = kin + sl_potential(d.u[i], lambda);
  }
  return d;
}

namespace {

// Number of eigenvalues strictly below x (Sturm sequence of the LDL^T pivots).
int sturm_count(const SLDiscretization& d, double x) {
  int count = 0;
  double q = 1.0;
  const double tiny = std::numeric_limits<double>::min();
  for (int i = 0; i < d.n; ++i) {
    const double e2 = i == 0 ? 0.0 : d.off[i - 1] * d.off[i - 1];
    q = d.diag[i] - x - (i == 0 ? 0.0 : e2 / q);
    if (q == 0.0) q = -tiny;
    if (q < 0.0) ++count;
  }
  return count;
}

}  // namespace

std::vector<double> eigenvalues(const SLDiscretization& d, int k) {
  if (k < 1 || k > d.n - 2) throw std::invalid_argument("eigenvalues: k must lie in [1, n-2]");
  double lo = std::numeric_limits<double>::infinity(), hi = -lo;
  for (int i = 0; i < d.n; ++i) {
    const double r = (i > 0 ? std::fabs(d.off[i - 1]) : 0.0) + (i + 1 < d.n ? std::fabs(d.off[i]) : 0.0);
    lo = std::min(lo, d.diag[i] - r);
    hi = std::max(hi, d.diag[i] + r);
  }
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(k));
  double floor = lo;
  for (int j = 0; j < k; ++j) {
    double a = floor, b = hi;
    int it = 0;
    while (b - a > 4.0 * std::numeric_limits<double>::epsilon() * std::max(std::fabs(a), std::fabs(b)) + 1e-300) {
      const double mid = 0.5 * (a + b);
      if (mid <= a || mid >= b) break;
      if (sturm_count(d, mid) > j) {
        b = mid;
      } else {
        a = mid;
      }
      if (++it > 2000) {
        std::ostringstream msg;
        msg << "bisection for eigenvalue " << j << " stalled after " << it << " steps, bracket [" << a << ", " << b << "]";
        throw SLEigenError(msg.str());
      }
    }
    const double e = 0.5 * (a + b);
    out.push_back(e);
    floor = a;
  }
  return out;
}

std::vector<double> eigenvalues_ql(const SLDiscretization& d) {
  const int n = d.n;
  std::vector<double> a = d.diag;
  std::vector<double> e(n, 0.0);
  for (int i = 0; i + 1 < n; ++i) e[i] = d.off[i];
  for (int l = 0; l < n; ++l) {
    int iter = 0;
    int m;
    do {
      for (m = l; m < n - 1; ++m) {
        const double dd = std::fabs(a[m]) + std::fabs(a[m + 1]);
        if (std::fabs(e[m]) <= std::numeric_limits<double>::epsilon() * dd) break;
      }
      if (m != l) {
        if (++iter > 60) {
          std::ostringstream msg;
          msg << "QL iteration did not converge for eigenvalue " << l << " after " << iter << " sweeps";
          throw SLEigenError(msg.str());
        }
        double g = (a[l + 1] - a[l]) / (2.0 * e[l]);
        double r = std::hypot(g, 1.0);
        g = a[m] - a[l] + e[l] / (g + std::copysign(r, g));
        double s = 1.0, c = 1.0, p = 0.0;
        int i;
        for (i = m - 1; i >= l; --i) {
          double f = s * e[i];
          const double b = c * e[i];
          r = std::hypot(f, g);
          e[i + 1] = r;
          if (r == 0.0) {
            a[i + 1] -= p;
            e[m] = 0.0;
            break;
          }
          s = f / r;
          c = g / r;
          g = a[i + 1] - p;
          r = (a[i] - g) * s + 2.0 * c * b;
          p = s * r;
          a[i + 1] = g + p;
          g = c * r - b;
        }
        if (r == 0.0 && i >= l) continue;
        a[l] -= p;
        e[l] = g;
        e[m] = 0.0;
      }
    } while (m != l);
  }
  std::sort(a.begin(), a.end());
  return a;
}

std::vector<double> eigenvector(const SLDiscretization& d, double eigenvalue) {
  const int n = d.n;
  const double shift = eigenvalue + 1e-10 * std::max(1.0, std::fabs(eigenvalue));
  std::vector<double> x(n, 1.0), c(n), y(n);
  for (int i = 0; i < n; ++i) x[i] = 1.0 + 1e-3 * std::sin(0.7 * i);
  for (int sweep = 0; sweep < 4; ++sweep) {
    // Thomas algorithm on (T - shift I) y = x.
    double denom = d.diag[0] - shift;
    if (denom == 0.0) denom = 1e-300;
    c[0] = n > 1 ? d.off[0] / denom : 0.0;
    y[0] = x[0] / denom;
    for (int i = 1; i < n; ++i) {
      denom = d.diag[i] - shift - d.off[i - 1] * c[i - 1];
      if (denom == 0.0) denom = 1e-300;
      c[i] = i + 1 < n ? d.off[i] / denom : 0.0;
      y[i] = (x[i] - d.off[i - 1] * y[i - 1]) / denom;
    }
    for (int i = n - 2; i >= 0; --i) y[i] -= c[i] * y[i + 1];
    double norm = 0.0;
    for (double v : y) norm += v * v;
    norm = std::sqrt(norm);
    for (int i = 0; i < n; ++i) x[i] = y[i] / norm;
  }
  return x;
}

int count_nodes(const std::vector<double>& v) {
  double vmax = 0.0;
  for (double a : v) vmax = std::max(vmax, std::fabs(a));
  const double floor = 1e-8 * vmax;
  int nodes = 0;
  int last_sign = 0;
  for (double a : v) {
    if (std::fabs(a) < floor) continue;
    const int s = a > 0.0 ? 1 : -1;
    if (last_sign != 0 && s != last_sign) ++nodes;
    last_sign = s;
  }
  return nodes;
}

int grid_cap() {
  if (const char* env = std::getenv("LAMBDA_OSC_GRID_CAP")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v >= 64) return static_cast<int>(std::min<long>(v, 1L << 26));
  }
  return 1 << 17;
}

namespace {

int intervals_for(double half_width, double spacing) {
  int intervals = 128;
  while (2.0 * half_width / intervals > spacing) intervals *= 2;
  return intervals;
}

}  // namespace

double choose_truncation(double lambda, int k, double tol) {
  if (lambda < 0.0) return wall_position(lambda);
  const double digits = std::log(1.0 / tol);
  if (lambda == 0.0) return std::sqrt(2.0 * k + 1.0) + std::sqrt(digits) + 3.0;
  const double vinf = continuum_threshold(lambda);
  const double base = 6.0 / std::sqrt(lambda);
  const double cap = 2000.0;
  double U = base;
  for (int iter = 0; iter < 12; ++iter) {
    const int intervals = intervals_for(U, 0.1);
    const SLDiscretization d = assemble(lambda, intervals - 1, U);
    const std::vector<double> e = eigenvalues(d, std::min(k, d.n - 2));
    double top = -1.0;
    for (double v : e) {
      if (v < vinf) top = v;
    }
    if (top < 0.0) return U;
    const double kappa = std::sqrt(2.0 * (vinf - top));
    const double wanted = std::min(cap, std::max(base, (digits + 8.0) / (2.0 * kappa)));
    if (wanted <= 1.05 * U) return std::max(U, wanted);
    U = wanted;
  }
  return U;
}

SLRefinement refine(double lambda, int k, double tol, const SLRefineOptions& opts) {
  if (!(tol >= 1e-8)) throw std::invalid_argument("refine: tolerance below 1e-8 is not supported");
  if (k < 1) throw std::invalid_argument("refine: k must be positive");
  SLRefinement out;
  out.lambda = lambda;
  out.threshold = continuum_threshold(lambda);
  out.half_width = lambda < 0.0 ? wall_position(lambda) : (opts.half_width ? *opts.half_width : choose_truncation(lambda, k, tol));
  const int cap = opts.cap ? *opts.cap : grid_cap();
  int intervals = intervals_for(out.half_width, opts.start_spacing);
  while (intervals - 1 - 2 < k) intervals *= 2;
  std::vector<double> previous_extrapolated;
  for (;;) {
    const int n = intervals - 1;
    if (n > cap) {
      std::ostringstream msg;
      msg << "refine: grid cap " << cap << " reached before tolerance " << tol;
      if (!out.levels.empty() && !out.levels.back().error.empty()) {
        msg << " (last error estimate " << *std::max_element(out.levels.back().error.begin(), out.levels.back().error.end())
            << ")";
      }
      throw SLEigenError(msg.str());
    }
    const SLDiscretization d = assemble(lambda, n, out.half_width);
    SLLevel level{n, d.h, eigenvalues(d, k), {}, {}};
    if (!out.levels.empty()) {
      const auto& coarse = out.levels.back().raw;
      for (int j = 0; j < k; ++j) level.extrapolated.push_back((4.0 * level.raw[j] - coarse[j]) / 3.0);
      if (!previous_extrapolated.empty()) {
        for (int j = 0; j < k; ++j) level.error.push_back(std::fabs(level.extrapolated[j] - previous_extrapolated[j]));
      }
      previous_extrapolated = level.extrapolated;
    }
    out.levels.push_back(level);
    const bool converged = !level.error.empty() && *std::max_element(level.error.begin(), level.error.end()) <= tol;
    if (converged) {
      out.values = level.extrapolated;
      out.error = level.error;
      const std::size_t L = out.levels.size();
      for (int j = 0; j < k; ++j) {
        const double d1 = out.levels[L - 3].raw[j] - out.levels[L - 2].raw[j];
        const double d2 = out.levels[L - 2].raw[j] - out.levels[L - 1].raw[j];
        out.order.push_back(std::log2(std::fabs(d1 / d2)));
      }
      for (int j = 0; j < k; ++j) {
        out.node_counts.push_back(count_nodes(eigenvector(d, level.raw[j])));
        if (out.values[j] < out.threshold) ++out.below_threshold;
      }
      return out;
    }
    intervals *= 2;
  }
}

}  // namespace lambda_osc
