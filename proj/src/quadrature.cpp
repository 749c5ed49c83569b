#include "ptosc/quadrature.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace ptosc {

void QuadratureSpec::validate() const {
  if (!(half_width > 0.0))
    throw std::domain_error("quadrature half_width must be positive");
  if (points < 64)
    throw std::domain_error("quadrature needs at least 64 points, got " +
                            std::to_string(points));
}

namespace {

QuadratureGrid trapezoid(double half_width, int points) {
  QuadratureGrid grid;
  grid.nodes.resize(static_cast<size_t>(points));
  grid.weights.resize(static_cast<size_t>(points));
  const double h = 2.0 * half_width / (points - 1);
  for (int i = 0; i < points; ++i) {
    grid.nodes[static_cast<size_t>(i)] = -half_width + i * h;
    grid.weights[static_cast<size_t>(i)] = h;
  }
  grid.weights.front() *= 0.5;
  grid.weights.back() *= 0.5;
  return grid;
}

// Gauss-Legendre nodes by Newton iteration on the Legendre recurrence,
// starting from the Chebyshev-angle estimates.
QuadratureGrid gauss_legendre(double half_width, int points) {
  QuadratureGrid grid;
  grid.nodes.resize(static_cast<size_t>(points));
  grid.weights.resize(static_cast<size_t>(points));
  const int n = points;
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    grid.nodes[static_cast<size_t>(i)] = -half_width * x;
    grid.nodes[static_cast<size_t>(n - 1 - i)] = half_width * x;
    grid.weights[static_cast<size_t>(i)] = half_width * w;
    grid.weights[static_cast<size_t>(n - 1 - i)] = half_width * w;
  }
  return grid;
}

}  // namespace

QuadratureGrid QuadratureGrid::make(const QuadratureSpec& spec) {
  spec.validate();
  switch (spec.rule) {
    case QuadratureRule::GaussLegendre:
      return gauss_legendre(spec.half_width, spec.points);
    case QuadratureRule::Trapezoid:
    default:
      return trapezoid(spec.half_width, spec.points);
  }
}

}  // namespace ptosc
