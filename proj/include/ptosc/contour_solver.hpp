#ifndef PTOSC_CONTOUR_SOLVER_HPP
#define PTOSC_CONTOUR_SOLVER_HPP

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "ptosc/model.hpp"

namespace ptosc {

enum class Scheme { FD2, FD4 };

/// Uniform real-line grid with Dirichlet ends. Interior nodes
/// x_j = -L + j h, j = 1..N, h = 2L/(N+1).
struct Discretization {
  double half_width = 10.0;
  int points = 1500;
  Scheme scheme = Scheme::FD4;

  double step() const { return 2.0 * half_width / (points + 1); }
  double node(int j) const { return -half_width + (j + 1) * step(); }
  void validate() const;
};

/// Complex potential of the shifted problem: x^2 - 2icx + G/(x-ic)^2.
/// Throws SingularPotentialError at x = 0 when c = 0 and G != 0.
std::complex<double> potential_eval(const ModelParams& params, double x);

/**
 * Dense discrete Hamiltonian -D2 + diag(V) on the interior nodes. FD2
 * uses the 3-point Laplacian, FD4 the 5-point one; stencil legs that
 * would cross the boundary are dropped (the Dirichlet extension by zero),
 * which keeps the matrix complex symmetric to the last bit. The boundary
 * rows are then formally low-order, but carry ~1e-12 of the bound-state
 * mass. Eigenvalues approximate E + c^2.
 */
Eigen::MatrixXcd build_hamiltonian(const ModelParams& params,
                                   const Discretization& disc);

struct EigenSolveResult {
  std::vector<std::complex<double>> eigenvalues;  // accepted, ascending Re
  std::vector<double> residuals;                  // ||Hv - lambda v|| / ||v||
  std::vector<double> boundary_weights;  // eigenvector mass in the outer 10%
  Discretization grid;
};

/**
 * Full non-Hermitian eigensolve of the discrete Hamiltonian, filtered.
 * Eigenvalues come from LAPACK zgeev; candidate eigenvectors (ascending
 * real part) are recovered by inverse iteration on the banded matrix and
 * accepted while residual < 1e-8 and boundary weight < 1e-6, until k
 * accepted. Requires k <= N/4; throws InsufficientResolutionError when
 * the grid cannot produce k clean pairs.
 */
EigenSolveResult solve_spectrum(const ModelParams& params,
                                const Discretization& disc, int k);

struct MatchEntry {
  std::complex<double> eigenvalue;
  LevelIndex level;
  double exact_energy = 0.0;
  double abs_error = 0.0;
};

struct MatchReport {
  std::vector<MatchEntry> entries;  // in ascending-Re eigenvalue order
  double max_abs_error = 0.0;
  std::vector<std::complex<double>> unmatched;
  bool ambiguous = false;
  std::vector<std::string> notes;
};

/**
 * Pair the accepted eigenvalues (minus the c^2 shift) against the exact
 * levels, greedily by absolute distance. Collisions where two numeric
 * values sit nearest the same exact level while some lower level goes
 * unclaimed are flagged ambiguous rather than silently re-resolved; the
 * degenerate pairs at integer alpha match to the two coincident levels
 * (distinct indices) without a flag.
 */
MatchReport match_exact(const EigenSolveResult& result,
                        const ModelParams& params);

/// Least-squares slope of log(error) against log(step). Returns nullopt
/// if fewer than two points or the errors are not strictly decreasing
/// with the step (rounding floor reached, or no convergence to measure).
std::optional<double> estimate_order(const std::vector<double>& steps,
                                     const std::vector<double>& errors);

struct ConvergenceReport {
  struct PerLevel {
    LevelIndex level;
    std::vector<double> errors;   // one per grid, in input order
    std::optional<double> order;  // absent when inconclusive
  };
  std::vector<PerLevel> levels;
  std::vector<double> steps;
  std::optional<double> order;  // median of conclusive per-level orders
};

/// Observed convergence order of the scheme: solve on each grid size,
/// measure per-level errors against the closed form, fit the slope.
/// Non-monotone error sequences are reported as inconclusive levels, not
/// errors. Requires at least three ascending grid sizes.
ConvergenceReport convergence_order(const ModelParams& params,
                                    const std::vector<int>& point_counts,
                                    int level_count, Scheme scheme,
                                    double half_width = 10.0);

}  // namespace ptosc

#endif  // PTOSC_CONTOUR_SOLVER_HPP
