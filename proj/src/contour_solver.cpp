#define LAPACK_COMPLEX_CPP
#include "ptosc/contour_solver.hpp"

#include <lapacke.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>
#include <stdexcept>
#include <string>

#include "ptosc/errors.hpp"

namespace ptosc {

namespace {

constexpr double kResidualThreshold = 1e-8;
constexpr double kBoundaryThreshold = 1e-6;

int bandwidth(Scheme scheme) { return scheme == Scheme::FD4 ? 2 : 1; }

// LAPACK general-band storage of (H - shift I), with kl extra fill rows
// for the LU factors.
struct BandedShifted {
  int n = 0;
  int kl = 0;
  int ku = 0;
  int ldab = 0;
  std::vector<std::complex<double>> ab;
  std::vector<lapack_int> ipiv;

  BandedShifted(const Eigen::MatrixXcd& h, int band,
                std::complex<double> shift)
      : n(static_cast<int>(h.rows())),
        kl(band),
        ku(band),
        ldab(2 * band + band + 1),
        ab(static_cast<size_t>(ldab) * n, 0.0),
        ipiv(static_cast<size_t>(n)) {
    for (int j = 0; j < n; ++j) {
      const int lo = std::max(0, j - ku), hi = std::min(n - 1, j + kl);
      for (int i = lo; i <= hi; ++i) {
        std::complex<double> v = h(i, j);
        if (i == j) v -= shift;
        ab[static_cast<size_t>(j) * ldab + (kl + ku + i - j)] = v;
      }
    }
  }

  // returns false if the shifted matrix factored exactly singular
  bool factor() {
    const int info = LAPACKE_zgbtrf(
        LAPACK_COL_MAJOR, n, n, kl, ku,
        reinterpret_cast<lapack_complex_double*>(ab.data()), ldab,
        ipiv.data());
    if (info < 0)
      throw std::runtime_error("zgbtrf: invalid argument " +
                               std::to_string(-info));
    return info == 0;
  }

  void solve(Eigen::VectorXcd& rhs) const {
    const int info = LAPACKE_zgbtrs(
        LAPACK_COL_MAJOR, 'N', n, kl, ku, 1,
        reinterpret_cast<const lapack_complex_double*>(ab.data()), ldab,
        ipiv.data(), reinterpret_cast<lapack_complex_double*>(rhs.data()),
        n);
    if (info != 0)
      throw std::runtime_error("zgbtrs failed with info " +
                               std::to_string(info));
  }
};

// Inverse iteration at the (converged) eigenvalue from zgeev. Two or
// three band solves give residuals at rounding level except when the
// start vector is deficient, which the fixed-seed random start avoids.
Eigen::VectorXcd inverse_iteration(const Eigen::MatrixXcd& h, int band,
                                   std::complex<double> lambda) {
  const int n = static_cast<int>(h.rows());
  std::mt19937 rng(12345);
  std::uniform_real_distribution<double> uniform(-1.0, 1.0);
  Eigen::VectorXcd v(n);
  for (int i = 0; i < n; ++i) v(i) = {uniform(rng), uniform(rng)};
  v /= v.norm();

  std::complex<double> shift = lambda;
  for (int attempt = 0; attempt < 3; ++attempt) {
    BandedShifted lu(h, band, shift);
    if (lu.factor()) {
      for (int it = 0; it < 3; ++it) {
        lu.solve(v);
        v /= v.norm();
      }
      return v;
    }
    // exactly singular pivot: nudge the shift off the eigenvalue
    shift += (1.0 + std::abs(lambda)) * 1e-13;
  }
  return v;
}

double boundary_weight(const Eigen::VectorXcd& v) {
  const int n = static_cast<int>(v.size());
  const int edge = std::max(1, n / 20);  // 5% per side, outer 10% total
  double outer = 0.0;
  for (int i = 0; i < edge; ++i)
    outer += std::norm(v(i)) + std::norm(v(n - 1 - i));
  return outer / v.squaredNorm();
}

}  // namespace

void Discretization::validate() const {
  if (!(half_width > 0.0))
    throw std::domain_error("discretization half_width must be positive");
  if (points < 16)
    throw std::domain_error("discretization needs at least 16 points");
}

std::complex<double> potential_eval(const ModelParams& params, double x) {
  const double c = params.shift();
  const double g = params.coupling();
  if (g != 0.0 && c == 0.0 && x == 0.0)
    throw SingularPotentialError(
        "potential singular at x = 0 when c = 0 and the coupling is "
        "nonzero");
  std::complex<double> v(x * x, -2.0 * c * x);
  if (g != 0.0) {
    const std::complex<double> t(x, -c);
    v += g / (t * t);
  }
  return v;
}

Eigen::MatrixXcd build_hamiltonian(const ModelParams& params,
                                   const Discretization& disc) {
  disc.validate();
  if (params.coupling() != 0.0 && params.shift() == 0.0)
    throw std::domain_error(
        "nonzero coupling requires a positive contour shift c");

  const int n = disc.points;
  const double h = disc.step();
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(n, n);

  if (disc.scheme == Scheme::FD2) {
    const double diag = 2.0 / (h * h), off = -1.0 / (h * h);
    for (int j = 0; j < n; ++j) {
      m(j, j) = diag + potential_eval(params, disc.node(j));
      if (j + 1 < n) {
        m(j, j + 1) = off;
        m(j + 1, j) = off;
      }
    }
  } else {
    const double diag = 30.0 / (12.0 * h * h);
    const double off1 = -16.0 / (12.0 * h * h);
    const double off2 = 1.0 / (12.0 * h * h);
    for (int j = 0; j < n; ++j) {
      m(j, j) = diag + potential_eval(params, disc.node(j));
      if (j + 1 < n) {
        m(j, j + 1) = off1;
        m(j + 1, j) = off1;
      }
      if (j + 2 < n) {
        m(j, j + 2) = off2;
        m(j + 2, j) = off2;
      }
    }
  }
  return m;
}

EigenSolveResult solve_spectrum(const ModelParams& params,
                                const Discretization& disc, int k) {
  disc.validate();
  if (k < 1) throw std::domain_error("solve_spectrum requires k >= 1");
  if (k > disc.points / 4)
    throw std::domain_error(
        "only the low-lying quarter of the discrete spectrum is "
        "trustworthy: need k <= N/4");

  const Eigen::MatrixXcd h = build_hamiltonian(params, disc);
  const int n = disc.points;

  Eigen::MatrixXcd work = h;  // zgeev overwrites its input
  Eigen::VectorXcd eigenvalues(n);
  const int info = LAPACKE_zgeev(
      LAPACK_COL_MAJOR, 'N', 'N', n,
      reinterpret_cast<lapack_complex_double*>(work.data()), n,
      reinterpret_cast<lapack_complex_double*>(eigenvalues.data()), nullptr,
      1, nullptr, 1);
  if (info != 0)
    throw std::runtime_error("zgeev failed with info " + std::to_string(info));

  std::vector<int> order(static_cast<size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    if (eigenvalues(a).real() != eigenvalues(b).real())
      return eigenvalues(a).real() < eigenvalues(b).real();
    return eigenvalues(a).imag() < eigenvalues(b).imag();
  });

  EigenSolveResult result;
  result.grid = disc;
  const int band = bandwidth(disc.scheme);
  int scanned = 0;
  for (int idx : order) {
    if (static_cast<int>(result.eigenvalues.size()) >= k) break;
    ++scanned;
    const std::complex<double> lambda = eigenvalues(idx);
    const Eigen::VectorXcd v = inverse_iteration(h, band, lambda);
    const double residual = (h * v - lambda * v).norm() / v.norm();
    const double bw = boundary_weight(v);
    if (residual < kResidualThreshold && bw < kBoundaryThreshold) {
      result.eigenvalues.push_back(lambda);
      result.residuals.push_back(residual);
      result.boundary_weights.push_back(bw);
    }
  }
  if (static_cast<int>(result.eigenvalues.size()) < k)
    throw InsufficientResolutionError(
        "only " + std::to_string(result.eigenvalues.size()) + " of " +
            std::to_string(k) +
            " requested eigenpairs passed the quality filters (" +
            std::to_string(scanned) + " candidates scanned); refine the grid",
        k, static_cast<int>(result.eigenvalues.size()), scanned);
  return result;
}

MatchReport match_exact(const EigenSolveResult& result,
                        const ModelParams& params) {
  if (result.eigenvalues.empty())
    throw std::domain_error("match_exact requires a non-empty solve result");

  const double c2 = params.shift() * params.shift();
  const int count = static_cast<int>(result.eigenvalues.size());

  double top = -std::numeric_limits<double>::infinity();
  for (const auto& lam : result.eigenvalues)
    top = std::max(top, lam.real() - c2);

  // candidate levels comfortably past the numeric range on both branches
  const double alpha = params.alpha();
  const int n_max = static_cast<int>(
      std::ceil((top + 4.0 + 2.0 * alpha) / 4.0)) + 1;
  std::vector<EnergyLevel> candidates =
      spectrum(alpha, 2 * (n_max + 1));

  struct Pair {
    double distance;
    int numeric;
    int exact;
  };
  std::vector<Pair> pairs;
  pairs.reserve(static_cast<size_t>(count) * candidates.size());
  for (int i = 0; i < count; ++i) {
    const double value = result.eigenvalues[static_cast<size_t>(i)].real() - c2;
    for (int j = 0; j < static_cast<int>(candidates.size()); ++j)
      pairs.push_back(
          {std::abs(value - candidates[static_cast<size_t>(j)].energy), i, j});
  }
  std::stable_sort(pairs.begin(), pairs.end(),
                   [](const Pair& a, const Pair& b) {
                     return a.distance < b.distance;
                   });

  std::vector<int> assigned(static_cast<size_t>(count), -1);
  std::vector<bool> taken(candidates.size(), false);
  for (const Pair& p : pairs) {
    if (assigned[static_cast<size_t>(p.numeric)] >= 0 ||
        taken[static_cast<size_t>(p.exact)])
      continue;
    assigned[static_cast<size_t>(p.numeric)] = p.exact;
    taken[static_cast<size_t>(p.exact)] = true;
  }

  MatchReport report;
  for (int i = 0; i < count; ++i) {
    const int j = assigned[static_cast<size_t>(i)];
    if (j < 0) {
      report.unmatched.push_back(result.eigenvalues[static_cast<size_t>(i)]);
      continue;
    }
    const double value = result.eigenvalues[static_cast<size_t>(i)].real() - c2;
    MatchEntry entry;
    entry.eigenvalue = result.eigenvalues[static_cast<size_t>(i)];
    entry.level = candidates[static_cast<size_t>(j)].level;
    entry.exact_energy = candidates[static_cast<size_t>(j)].energy;
    entry.abs_error = std::abs(value - candidates[static_cast<size_t>(j)].energy);
    report.max_abs_error = std::max(report.max_abs_error, entry.abs_error);
    report.entries.push_back(entry);
  }

  // Ambiguity: two numeric values whose nearest exact level coincides
  // while a level below the matched range went unclaimed. Exact
  // degeneracies (integer alpha) produce equal-distance ties, which the
  // greedy assignment resolves to the two coincident levels, and are not
  // flagged.
  std::vector<int> nearest(static_cast<size_t>(count), -1);
  for (int i = 0; i < count; ++i) {
    const double value = result.eigenvalues[static_cast<size_t>(i)].real() - c2;
    double best = std::numeric_limits<double>::infinity();
    for (int j = 0; j < static_cast<int>(candidates.size()); ++j) {
      const double d = std::abs(value - candidates[static_cast<size_t>(j)].energy);
      if (d < best) {
        best = d;
        nearest[static_cast<size_t>(i)] = j;
      }
    }
  }
  bool unclaimed_low = false;
  for (int j = 0; j < static_cast<int>(candidates.size()); ++j)
    if (!taken[static_cast<size_t>(j)] &&
        candidates[static_cast<size_t>(j)].energy < top - 1e-9)
      unclaimed_low = true;
  if (unclaimed_low) {
    for (int i = 0; i < count; ++i) {
      for (int j = i + 1; j < count; ++j) {
        if (nearest[static_cast<size_t>(i)] != nearest[static_cast<size_t>(j)])
          continue;
        const int ai = assigned[static_cast<size_t>(i)];
        const int aj = assigned[static_cast<size_t>(j)];
        // both landed on coincident levels of equal energy: a crossing
        // resolved by the assignment, not an ambiguity
        if (ai >= 0 && aj >= 0 &&
            candidates[static_cast<size_t>(ai)].energy ==
                candidates[static_cast<size_t>(aj)].energy)
          continue;
        report.ambiguous = true;
        report.notes.push_back(
            "eigenvalues " + std::to_string(i) + " and " + std::to_string(j) +
            " are both nearest the same exact level while a lower level is "
            "unmatched");
      }
    }
  }
  return report;
}

std::optional<double> estimate_order(const std::vector<double>& steps,
                                     const std::vector<double>& errors) {
  if (steps.size() != errors.size() || steps.size() < 2) return std::nullopt;
  std::vector<int> order(steps.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return steps[static_cast<size_t>(a)] > steps[static_cast<size_t>(b)]; });

  double prev = std::numeric_limits<double>::infinity();
  for (int i : order) {
    const double e = errors[static_cast<size_t>(i)];
    if (!(e > 0.0) || !(e < prev)) return std::nullopt;  // non-monotone
    prev = e;
  }

  double sx = 0.0, sy = 0.0;
  for (size_t i = 0; i < steps.size(); ++i) {
    sx += std::log(steps[i]);
    sy += std::log(errors[i]);
  }
  const double mx = sx / steps.size(), my = sy / steps.size();
  double sxx = 0.0, sxy = 0.0;
  for (size_t i = 0; i < steps.size(); ++i) {
    const double dx = std::log(steps[i]) - mx;
    sxx += dx * dx;
    sxy += dx * (std::log(errors[i]) - my);
  }
  if (sxx == 0.0) return std::nullopt;
  return sxy / sxx;
}

ConvergenceReport convergence_order(const ModelParams& params,
                                    const std::vector<int>& point_counts,
                                    int level_count, Scheme scheme,
                                    double half_width) {
  if (point_counts.size() < 3)
    throw std::domain_error("convergence_order needs at least three grids");
  for (size_t i = 1; i < point_counts.size(); ++i)
    if (point_counts[i] <= point_counts[i - 1])
      throw std::domain_error("grid sizes must be strictly ascending");
  if (level_count < 1)
    throw std::domain_error("level_count must be positive");

  const std::vector<EnergyLevel> exact = spectrum(params.alpha(), level_count);
  const double c2 = params.shift() * params.shift();

  ConvergenceReport report;
  std::vector<std::vector<double>> errors(
      static_cast<size_t>(level_count),
      std::vector<double>(point_counts.size(), 0.0));
  for (size_t g = 0; g < point_counts.size(); ++g) {
    Discretization disc{half_width, point_counts[g], scheme};
    report.steps.push_back(disc.step());
    const EigenSolveResult solved = solve_spectrum(params, disc, level_count);
    for (int i = 0; i < level_count; ++i)
      errors[static_cast<size_t>(i)][g] =
          std::abs(solved.eigenvalues[static_cast<size_t>(i)].real() - c2 -
                   exact[static_cast<size_t>(i)].energy);
  }

  std::vector<double> orders;
  for (int i = 0; i < level_count; ++i) {
    ConvergenceReport::PerLevel level;
    level.level = exact[static_cast<size_t>(i)].level;
    level.errors = errors[static_cast<size_t>(i)];
    level.order = estimate_order(report.steps, level.errors);
    if (level.order) orders.push_back(*level.order);
    report.levels.push_back(std::move(level));
  }
  if (!orders.empty()) {
    std::sort(orders.begin(), orders.end());
    const size_t mid = orders.size() / 2;
    report.order = orders.size() % 2 == 1
                       ? orders[mid]
                       : 0.5 * (orders[mid - 1] + orders[mid]);
  }
  return report;
}

}  // namespace ptosc
