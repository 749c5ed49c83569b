#ifndef PTOSC_PERTURBATION_HPP
#define PTOSC_PERTURBATION_HPP

#include <complex>

#include "ptosc/model.hpp"
#include "ptosc/quadrature.hpp"

namespace ptosc {

/// The three large-screening components of the core W(x) = (x-ic)^{-2}:
///   w1 = 1/(x^2+c^2)            even, real,      O(x^-2)
///   w2 = 2icx/(x^2+c^2)^2       odd, imaginary,  O(x^-3)
///   w3 = -2c^2/(x^2+c^2)^2      even, real,      O(x^-4)
/// Their sum reproduces (x-ic)^{-2} identically.
struct WComponents {
  std::complex<double> w1;
  std::complex<double> w2;
  std::complex<double> w3;

  std::complex<double> sum() const { return w1 + w2 + w3; }
};

WComponents w_components(double x, double shift);

/// Screening reparameterization mu = g = 1/c^2, lambda = -1/c^4, under
/// which w1 = mu + lambda x^2 / (1 + g x^2) pointwise.
struct CoreDecomposition {
  double shift;
  double mu;
  double g;
  double lam;
};

CoreDecomposition reparameterize(double shift);

/**
 * First-order coefficient of the energy in powers of the coupling G,
 * from the unperturbed (alpha = 1/2) state of the given level on the
 * same contour:
 *
 *   e1 = <phi0, (x-ic)^{-2} phi0> / <phi0, phi0>
 *
 * with unconjugated products. Exactly -2q analytically (the closed-form
 * spectrum gives dE/dG = -2q at G = 0), and independent of c.
 */
double rs_first_order(LevelIndex level, double shift,
                      const QuadratureSpec& quad = QuadratureSpec{});

struct RSResult {
  LevelIndex level;
  int order = 2;
  double value = 0.0;
  int basis_size = 0;
  double basis_delta = 0.0;  // value minus the basis_size/2 partial sum
  QuadratureSpec quadrature;
};

/**
 * Second-order coefficient by sum over states: the lowest basis_size
 * unperturbed levels of both quasi-parities, interleaved by ascending
 * unperturbed energy,
 *
 *   e2 = sum_{m != level} <phi_m, W phi_l>^2
 *          / ((E_l - E_m) <phi_m, phi_m> <phi_l, phi_l>).
 *
 * The closed form gives e2 -> +2q. Convergence in basis_size is slow and
 * oscillatory (the truncation error decays only like basis^{-1/2} for
 * the q = +1 levels: W couples the two parity families through the pole
 * residue at x = ic, and those cross elements grow with the intermediate
 * index). The reported basis_delta tracks it. Requires basis_size >= 10.
 */
RSResult rs_second_order(LevelIndex level, double shift, int basis_size,
                         const QuadratureSpec& quad = QuadratureSpec{});

struct PerturbativeComparison {
  LevelIndex level;
  double coupling = 0.0;
  double exact = 0.0;          // closed-form E at alpha = sqrt(G + 1/4)
  double unperturbed = 0.0;    // E at G = 0
  double first_order = 0.0;    // e1
  double second_order = 0.0;   // e2 at the given basis size
  double perturbative = 0.0;   // E0 + G e1 + G^2 e2
  double residual = 0.0;       // |exact - perturbative|
};

/// Closes the loop between the screening decomposition and the closed
/// form: the residual is O(G^3) when e2 has converged. |G| <= 0.1.
PerturbativeComparison exact_vs_perturbative(
    LevelIndex level, double coupling, double shift, int basis_size,
    const QuadratureSpec& quad = QuadratureSpec{});

}  // namespace ptosc

#endif  // PTOSC_PERTURBATION_HPP
