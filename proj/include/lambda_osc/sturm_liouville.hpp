#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace lambda_osc {

/// Finite differences for -(1/2) d^2/du^2 + V(u) in the flattening coordinate
/// u (du = dy / sqrt(1 + L y^2)). Self-contained: nothing here uses the
/// closed-form spectrum or the polynomial families.
enum class SLBoundary { dirichlet_at_walls, dirichlet_truncated, dirichlet_truncated_gaussian };

std::string to_string(SLBoundary b);

struct SLDiscretization {
  double lambda = 0.0;
  int n = 0;                ///< interior nodes (the end points are not unknowns)
  double half_width = 0.0;  ///< walls at +-pi/(2 sqrt|L|) for L < 0, truncation U otherwise
  double h = 0.0;
  SLBoundary boundary = SLBoundary::dirichlet_truncated;
  std::vector<double> u;
  std::vector<double> diag;
  std::vector<double> off;  ///< n - 1 entries
};

/// V(u) = (1+L)/(2L) tanh^2(sqrt(L) u) for L > 0, (1-|L|)/(2|L|) tan^2(sqrt|L| u)
/// for L < 0, u^2/2 for L = 0.
double sl_potential(double u, double lambda);

/// sup V: (1 + L)/(2L) for L > 0, +infinity otherwise.
double continuum_threshold(double lambda);

/// Wall position pi/(2 sqrt|L|) for L < 0.
double wall_position(double lambda);

/// Throws std::invalid_argument for n < 64 or a non-positive half-width
/// (half_width is ignored for L < 0).
SLDiscretization assemble(double lambda, int n, double half_width = 0.0);

struct SLEigenError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Lowest k eigenvalues by Sturm-sequence bisection, ascending.
std::vector<double> eigenvalues(const SLDiscretization& d, int k);

/// All eigenvalues by implicit-shift QL, ascending. O(n^2); intended for
/// cross-checks on small grids.
std::vector<double> eigenvalues_ql(const SLDiscretization& d);

/// Unit eigenvector for an (accurate) eigenvalue by inverse iteration.
std::vector<double> eigenvector(const SLDiscretization& d, double eigenvalue);

/// Sign changes of v, ignoring entries below 1e-8 max|v|.
int count_nodes(const std::vector<double>& v);

/// Grid cap (interior nodes) from LAMBDA_OSC_GRID_CAP, default 2^17.
int grid_cap();

struct SLLevel {
  int n;
  double h;
  std::vector<double> raw;
  std::vector<double> extrapolated;  ///< empty on the first level
  std::vector<double> error;         ///< |R_j - R_{j-1}|, empty until two extrapolants exist
};

struct SLRefinement {
  double lambda = 0.0;
  double half_width = 0.0;
  double threshold = 0.0;
  std::vector<double> values;      ///< final Richardson extrapolants
  std::vector<double> error;       ///< achieved error estimates
  std::vector<double> order;       ///< log2 of successive raw-difference ratios, last three levels
  std::vector<int> node_counts;    ///< eigenvector sign changes on the finest grid
  int below_threshold = 0;         ///< how many of `values` lie below the continuum threshold
  std::vector<SLLevel> levels;
};

struct SLRefineOptions {
  std::optional<double> half_width;  ///< override the automatic truncation (L >= 0)
  std::optional<int> cap;            ///< override grid_cap()
  double start_spacing = 0.05;
};

/// Richardson extrapolation R = (4 E_{h/2} - E_h)/3 over grid doublings until
/// successive extrapolants agree within tol for all k values.
/// Throws std::invalid_argument for tol < 1e-8 and SLEigenError if the cap
/// is reached first.
SLRefinement refine(double lambda, int k, double tol, const SLRefineOptions& opts = {});

/// For L > 0: truncation chosen from the decay rate of the highest state
/// below threshold, sqrt(2 (V_inf - E)). For L = 0 from the Gaussian tail.
double choose_truncation(double lambda, int k, double tol);

}  // namespace lambda_osc
