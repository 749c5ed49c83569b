#ifndef PTOSC_SPECIAL_HPP
#define PTOSC_SPECIAL_HPP

#include <complex>
#include <vector>

namespace ptosc {

/**
 * Generalized Laguerre polynomial L_n^{(beta)}(z) in the standard
 * normalization (leading term (-z)^n / n!), evaluated by the three-term
 * recurrence
 *
 *   (k+1) L_{k+1} = (2k + 1 + beta - z) L_k - (k + beta) L_{k-1}.
 *
 * beta may be any real, including nonpositive integers: the recurrence is
 * polynomial in beta, so the "exceptional" indices beta = -1, -2, ...
 * that arise on the q = +1 branch at integer alpha evaluate cleanly.
 * Throws std::domain_error for n < 0.
 */
std::complex<double> laguerre_eval(int n, double beta, std::complex<double> z);

/// d/dz L_n^{(beta)}(z) = -L_{n-1}^{(beta+1)}(z); zero for n = 0.
std::complex<double> laguerre_derivative(int n, double beta,
                                         std::complex<double> z);

/**
 * Residual of the factorization tying the two quasi-parity families
 * together at alpha = 1:
 *
 *   |L_{n+1}^{(-1)}(z) + z L_n^{(1)}(z) / (n+1)|
 *
 * (the 1/(n+1) converts between the standard normalization used here and
 * the n!-scaled rows in which the identity is usually displayed). The
 * value is pure floating-point noise: <= 1e-10 (1 + |z|)^{n+1}.
 */
double laguerre_factorization_residual(int n, std::complex<double> z);

/**
 * Kummer confluent hypergeometric series 1F1(a, b; z) by direct summation
 * with term recurrence t_{k+1} = t_k (a+k) z / ((b+k)(k+1)).
 *
 * Stops when three consecutive terms fall below tol * |sum| (a single
 * small term is not trusted: the series alternates at moderate |z|), or
 * exactly when a is a nonpositive integer and the series terminates as a
 * polynomial. Throws PoleError when b is a nonpositive integer within
 * 1e-12 (on the q = +1 branch this happens exactly at integer alpha;
 * evaluate via laguerre_eval there), NonConvergenceError past 10000
 * terms.
 */
std::complex<double> kummer_series(std::complex<double> a,
                                   std::complex<double> b,
                                   std::complex<double> z,
                                   double tol = 1e-14);

/// Monomial coefficients of L_n^{(beta)}, ascending in degree; size n+1.
/// c_k = (-1)^k binom(n+beta, n-k) / k!, formed without dividing by any
/// beta-dependent factor so that negative integer beta is exact.
std::vector<double> laguerre_coefficients(int n, double beta);

/**
 * All n roots of L_n^{(beta)} in the complex plane: eigenvalues of the
 * balanced companion matrix of the coefficient expansion, polished by
 * Newton iteration until |L_n^{(beta)}(z)| <= 1e-10 * max|coefficient|
 * (or 20 steps). Returned sorted by (Re, Im). n = 0 gives an empty list.
 *
 * For beta > -1 all roots are real positive (classical orthogonality
 * interval); for beta <= -1 negative or complex-pair roots appear and are
 * reported as found.
 */
std::vector<std::complex<double>> laguerre_roots(int n, double beta);

}  // namespace ptosc

#endif  // PTOSC_SPECIAL_HPP
