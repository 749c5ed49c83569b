#ifndef PTOSC_QUADRATURE_HPP
#define PTOSC_QUADRATURE_HPP

#include <vector>

namespace ptosc {

enum class QuadratureRule { Trapezoid, GaussLegendre };

/// Real-line quadrature truncated to [-half_width, half_width]. The
/// trapezoid rule converges superalgebraically on the Gaussian-damped
/// integrands used throughout and is the default; Gauss-Legendre is
/// available for cross-checks. Requires points >= 64. Whether half_width
/// suffices is checked against the actual integrand at c_product time.
struct QuadratureSpec {
  double half_width = 12.0;
  int points = 4000;
  QuadratureRule rule = QuadratureRule::Trapezoid;

  void validate() const;
};

struct QuadratureGrid {
  std::vector<double> nodes;
  std::vector<double> weights;

  static QuadratureGrid make(const QuadratureSpec& spec);
};

}  // namespace ptosc

#endif  // PTOSC_QUADRATURE_HPP
