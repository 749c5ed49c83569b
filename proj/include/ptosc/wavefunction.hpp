#ifndef PTOSC_WAVEFUNCTION_HPP
#define PTOSC_WAVEFUNCTION_HPP

#include <complex>
#include <optional>
#include <vector>

#include "ptosc/model.hpp"
#include "ptosc/quadrature.hpp"

namespace ptosc {

enum class Normalization {
  Raw,          // overall constant 1
  CNormalized,  // unconjugated self-product 1, leading coefficient made
                // positive-real
};

struct WaveFunctionSpec {
  LevelIndex level;
  ModelParams params = ModelParams::from_alpha(0.5, 1.0);
  Normalization normalization = Normalization::Raw;

  void validate() const;
};

/**
 * Analytic bound state on the shifted contour,
 *
 *   phi(x) = C (x - ic)^{-q alpha + 1/2} e^{-(x-ic)^2/2}
 *              L_n^{(-q alpha)}[(x - ic)^2],
 *
 * with the complex power on the principal branch. For x real and c > 0
 * the argument x - ic stays in the open lower half-plane and never meets
 * the cut running up from x = ic. Raw normalization has C = 1;
 * c-normalized states compute C from the unconjugated self-product using
 * the given quadrature (throwing NormDegeneracyError near the unavoided
 * crossings, where that product vanishes).
 */
class Wavefunction {
 public:
  explicit Wavefunction(const WaveFunctionSpec& spec,
                        const QuadratureSpec& quad = QuadratureSpec{});

  std::complex<double> operator()(double x) const;

  const WaveFunctionSpec& spec() const { return spec_; }
  std::complex<double> constant() const { return constant_; }

 private:
  WaveFunctionSpec spec_;
  std::complex<double> constant_;
};

/// One-off evaluation of phi(x). Raw specs evaluate directly; c-normalized
/// specs construct the normalization first (prefer a Wavefunction object
/// when evaluating many points).
std::complex<double> wavefunction_eval(const WaveFunctionSpec& spec, double x);

/**
 * Unconjugated bilinear form <f, g> = integral of f(x) g(x) dx over the
 * truncated real line. No complex conjugation: this is the product under
 * which the analytic states of a common alpha are mutually orthogonal,
 * and its value is independent of the contour shift c. The integrand must
 * have decayed below 1e-16 of its on-grid peak at the interval ends;
 * otherwise QuadratureTruncationError.
 */
std::complex<double> c_product(const WaveFunctionSpec& f,
                               const WaveFunctionSpec& g,
                               const QuadratureSpec& quad = QuadratureSpec{});

/// Zeros of one bound state. poly_roots are the n roots of L_n^{(-q alpha)}
/// in the z = (x-ic)^2 plane; each maps to the pair x = ic +- sqrt(z), so
/// x_zeros always holds exactly 2n entries. The q = -1 prefactor
/// (x - ic)^{alpha + 1/2} contributes one more zero marker at x = ic.
struct RootSet {
  std::vector<std::complex<double>> poly_roots;
  std::vector<std::complex<double>> x_zeros;
  std::optional<std::complex<double>> prefactor_zero;
};

RootSet nodal_zeros(const WaveFunctionSpec& spec);

}  // namespace ptosc

#endif  // PTOSC_WAVEFUNCTION_HPP
