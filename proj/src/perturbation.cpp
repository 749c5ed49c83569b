#include "ptosc/perturbation.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "ptosc/errors.hpp"
#include "ptosc/wavefunction.hpp"

namespace ptosc {

namespace {

// unperturbed (alpha = 1/2) levels by ascending energy E0 = 2m + 1:
// even m are q = +1 states, odd m are q = -1
LevelIndex basis_level(int m) {
  return m % 2 == 0 ? LevelIndex(1, m / 2) : LevelIndex(-1, m / 2);
}

int basis_index(LevelIndex level) {
  return 2 * level.n + (level.q == 1 ? 0 : 1);
}

double unperturbed_energy(int m) { return 2.0 * m + 1.0; }

struct BasisSamples {
  QuadratureGrid grid;
  std::vector<std::complex<double>> core;  // (x - ic)^{-2} on the nodes
  std::vector<std::vector<std::complex<double>>> states;

  BasisSamples(double shift, int count, const QuadratureSpec& quad) {
    grid = QuadratureGrid::make(quad);
    const size_t npts = grid.nodes.size();
    core.resize(npts);
    for (size_t i = 0; i < npts; ++i) {
      const std::complex<double> t(grid.nodes[i], -shift);
      core[i] = 1.0 / (t * t);
    }
    const ModelParams free_params = ModelParams::from_alpha(0.5, shift);
    states.resize(static_cast<size_t>(count));
    for (int m = 0; m < count; ++m) {
      const Wavefunction state(
          WaveFunctionSpec{basis_level(m), free_params, Normalization::Raw});
      auto& vals = states[static_cast<size_t>(m)];
      vals.resize(npts);
      for (size_t i = 0; i < npts; ++i) vals[i] = state(grid.nodes[i]);
    }
    // the highest state decays slowest; if it has not died off at the
    // endpoints its self-product (and everything built on it) is garbage
    const auto& hi = states.back();
    double peak = 0.0;
    for (const auto& v : hi) peak = std::max(peak, std::norm(v));
    const double tail = std::max(std::norm(hi.front()), std::norm(hi.back()));
    if (peak > 0.0 && tail > 1e-16 * peak)
      throw QuadratureTruncationError(
          "highest basis state has not decayed at the quadrature endpoints; "
          "increase half_width (and points) for this basis size");
  }

  std::complex<double> overlap(int a, int b, bool with_core) const {
    const auto& fa = states[static_cast<size_t>(a)];
    const auto& fb = states[static_cast<size_t>(b)];
    std::complex<double> sum = 0.0;
    for (size_t i = 0; i < grid.nodes.size(); ++i) {
      std::complex<double> term = grid.weights[i] * fa[i] * fb[i];
      if (with_core) term *= core[i];
      sum += term;
    }
    return sum;
  }
};

}  // namespace

WComponents w_components(double x, double shift) {
  if (!(shift > 0.0))
    throw std::domain_error("w_components requires a positive shift c");
  const double d = x * x + shift * shift;
  WComponents w;
  w.w1 = 1.0 / d;
  w.w2 = std::complex<double>(0.0, 2.0 * shift * x / (d * d));
  w.w3 = -2.0 * shift * shift / (d * d);
  return w;
}

CoreDecomposition reparameterize(double shift) {
  if (!(shift > 0.0))
    throw std::domain_error("reparameterize requires a positive shift c");
  const double mu = 1.0 / (shift * shift);
  return CoreDecomposition{shift, mu, mu, -mu * mu};
}

double rs_first_order(LevelIndex level, double shift,
                      const QuadratureSpec& quad) {
  if (!(shift > 0.0))
    throw std::domain_error("rs_first_order requires a positive shift c");
  const int l = basis_index(LevelIndex(level.q, level.n));
  BasisSamples basis(shift, l + 1, quad);
  const std::complex<double> e1 =
      basis.overlap(l, l, true) / basis.overlap(l, l, false);
  return e1.real();
}

RSResult rs_second_order(LevelIndex level, double shift, int basis_size,
                         const QuadratureSpec& quad) {
  if (!(shift > 0.0))
    throw std::domain_error("rs_second_order requires a positive shift c");
  if (basis_size < 10)
    throw std::domain_error("rs_second_order requires basis_size >= 10");

  const int l = basis_index(LevelIndex(level.q, level.n));
  const int count = std::max(basis_size, l + 1);
  BasisSamples basis(shift, count, quad);

  const std::complex<double> nu_l = basis.overlap(l, l, false);
  const double e_l = unperturbed_energy(l);

  std::complex<double> full = 0.0, half = 0.0;
  for (int m = 0; m < basis_size; ++m) {
    if (m == l) continue;
    const double gap = e_l - unperturbed_energy(m);
    if (std::abs(gap) < 1e-9)
      throw std::logic_error(
          "degenerate unperturbed pair in the second-order sum");
    const std::complex<double> element = basis.overlap(m, l, true);
    const std::complex<double> nu_m = basis.overlap(m, m, false);
    const std::complex<double> term = element * element / (gap * nu_m * nu_l);
    full += term;
    if (m < basis_size / 2) half += term;
  }

  RSResult result;
  result.level = level;
  result.order = 2;
  result.value = full.real();
  result.basis_size = basis_size;
  result.basis_delta = (full - half).real();
  result.quadrature = quad;
  return result;
}

PerturbativeComparison exact_vs_perturbative(LevelIndex level, double coupling,
                                             double shift, int basis_size,
                                             const QuadratureSpec& quad) {
  if (std::abs(coupling) > 0.1)
    throw std::domain_error(
        "exact_vs_perturbative is meant for the perturbative window "
        "|G| <= 0.1");
  const double alpha = alpha_from_coupling(coupling);

  PerturbativeComparison cmp;
  cmp.level = level;
  cmp.coupling = coupling;
  cmp.exact = exact_energy(level, alpha);
  cmp.unperturbed = exact_energy(level, 0.5);
  cmp.first_order = rs_first_order(level, shift, quad);
  cmp.second_order = rs_second_order(level, shift, basis_size, quad).value;
  cmp.perturbative = cmp.unperturbed + coupling * cmp.first_order +
                     coupling * coupling * cmp.second_order;
  cmp.residual = std::abs(cmp.exact - cmp.perturbative);
  return cmp;
}

}  // namespace ptosc
