#include "ptosc/special.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

#include "ptosc/errors.hpp"

namespace ptosc {

namespace {

bool is_nonpositive_integer(std::complex<double> b, double tol = 1e-12) {
  if (std::abs(b.imag()) > tol) return false;
  const double r = std::round(b.real());
  return r <= 0.0 && std::abs(b.real() - r) <= tol;
}

// Parlett-Reinsch style balancing: scale rows/columns by powers of two to
// equalize their 1-norms. Improves companion-matrix eigenvalues of
// unevenly scaled polynomials; similarity by exact powers of two, so no
// rounding is introduced.
void balance(Eigen::MatrixXd& a) {
  const int n = static_cast<int>(a.rows());
  bool converged = false;
  while (!converged) {
    converged = true;
    for (int i = 0; i < n; ++i) {
      double r = 0.0, c = 0.0;
      for (int j = 0; j < n; ++j) {
        if (j == i) continue;
        c += std::abs(a(j, i));
        r += std::abs(a(i, j));
      }
      if (c == 0.0 || r == 0.0) continue;
      double f = 1.0;
      const double s = c + r;
      while (c < r / 2.0) {
        c *= 2.0;
        r /= 2.0;
        f *= 2.0;
      }
      while (c >= r * 2.0) {
        c /= 2.0;
        r *= 2.0;
        f /= 2.0;
      }
      if (c + r < 0.95 * s) {
        converged = false;
        a.col(i) *= f;
        a.row(i) /= f;
      }
    }
  }
}

}  // namespace

std::complex<double> laguerre_eval(int n, double beta,
                                   std::complex<double> z) {
  if (n < 0)
    throw std::domain_error("laguerre_eval: n must be nonnegative, got " +
                            std::to_string(n));
  std::complex<double> p0 = 1.0;
  if (n == 0) return p0;
  std::complex<double> p1 = beta + 1.0 - z;
  for (int k = 1; k < n; ++k) {
    std::complex<double> p2 =
        ((2.0 * k + 1.0 + beta - z) * p1 - (k + beta) * p0) / (k + 1.0);
    p0 = p1;
    p1 = p2;
  }
  return p1;
}

std::complex<double> laguerre_derivative(int n, double beta,
                                         std::complex<double> z) {
  if (n < 0) throw std::domain_error("laguerre_derivative: n must be >= 0");
  if (n == 0) return 0.0;
  return -laguerre_eval(n - 1, beta + 1.0, z);
}

double laguerre_factorization_residual(int n, std::complex<double> z) {
  if (n < 0)
    throw std::domain_error(
        "laguerre_factorization_residual: n must be nonnegative");
  const std::complex<double> lhs = laguerre_eval(n + 1, -1.0, z);
  const std::complex<double> rhs = z * laguerre_eval(n, 1.0, z) / (n + 1.0);
  return std::abs(lhs + rhs);
}

std::complex<double> kummer_series(std::complex<double> a,
                                   std::complex<double> b,
                                   std::complex<double> z, double tol) {
  if (!(tol > 0.0)) throw std::domain_error("kummer_series: tol must be > 0");
  if (is_nonpositive_integer(b))
    throw PoleError("kummer_series: b = " + std::to_string(b.real()) +
                    " is a nonpositive integer (parameter pole)");

  constexpr int kMaxTerms = 10000;
  std::complex<double> term = 1.0;
  std::complex<double> sum = term;
  int small_streak = 0;
  for (int k = 0; k < kMaxTerms; ++k) {
    const std::complex<double> ak = a + static_cast<double>(k);
    if (ak == 0.0) return sum;  // polynomial termination, all later terms 0
    term *= ak * z / ((b + static_cast<double>(k)) * (k + 1.0));
    sum += term;
    if (std::abs(term) < tol * std::abs(sum)) {
      if (++small_streak >= 3) return sum;
    } else {
      small_streak = 0;
    }
  }
  throw NonConvergenceError("kummer_series: no convergence within 10000 terms");
}

std::vector<double> laguerre_coefficients(int n, double beta) {
  if (n < 0)
    throw std::domain_error("laguerre_coefficients: n must be nonnegative");
  std::vector<double> coeff(static_cast<size_t>(n) + 1);
  double k_factorial = 1.0;
  for (int k = 0; k <= n; ++k) {
    if (k > 0) k_factorial *= k;
    // binom(n + beta, n - k), as a plain product so that zero factors
    // (negative integer beta) come out exact
    double binom = 1.0;
    for (int j = 1; j <= n - k; ++j) binom *= (beta + k + j) / j;
    coeff[static_cast<size_t>(k)] = (k % 2 == 0 ? 1.0 : -1.0) / k_factorial * binom;
  }
  return coeff;
}

std::vector<std::complex<double>> laguerre_roots(int n, double beta) {
  if (n < 0) throw std::domain_error("laguerre_roots: n must be nonnegative");
  if (n == 0) return {};

  const std::vector<double> coeff = laguerre_coefficients(n, beta);
  const double lead = coeff.back();  // (-1)^n / n!, never zero
  double scale = 0.0;
  for (double c : coeff) scale = std::max(scale, std::abs(c));

  Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(n, n);
  for (int i = 1; i < n; ++i) companion(i, i - 1) = 1.0;
  for (int i = 0; i < n; ++i) companion(i, n - 1) = -coeff[static_cast<size_t>(i)] / lead;
  balance(companion);

  Eigen::EigenSolver<Eigen::MatrixXd> solver(companion, false);
  if (solver.info() != Eigen::Success)
    throw std::runtime_error("laguerre_roots: companion eigensolve failed");

  std::vector<std::complex<double>> roots(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) {
    std::complex<double> z = solver.eigenvalues()(i);
    for (int step = 0; step < 20; ++step) {
      const std::complex<double> value = laguerre_eval(n, beta, z);
      if (std::abs(value) <= 1e-12 * scale) break;
      const std::complex<double> deriv = laguerre_derivative(n, beta, z);
      if (deriv == 0.0) break;
      z -= value / deriv;
    }
    roots[static_cast<size_t>(i)] = z;
  }

  std::sort(roots.begin(), roots.end(),
            [](std::complex<double> a, std::complex<double> b) {
              if (a.real() != b.real()) return a.real() < b.real();
              return a.imag() < b.imag();
            });
  return roots;
}

}  // namespace ptosc
