#include "ptosc/wavefunction.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "ptosc/errors.hpp"
#include "ptosc/special.hpp"

namespace ptosc {

namespace {

constexpr double kDecayThreshold = 1e-16;

std::complex<double> raw_eval(const LevelIndex& level,
                              const ModelParams& params, double x) {
  const std::complex<double> t(x, -params.shift());
  const double s = -level.q * params.alpha() + 0.5;
  std::complex<double> prefactor;
  if (t == 0.0) {
    // c = 0, x = 0: with zero coupling the exponent is 0 or 1 and the
    // power is a plain polynomial; anything else sits on the branch point.
    if (s == 0.0)
      prefactor = 1.0;
    else if (s > 0.0 && s == std::floor(s))
      prefactor = 0.0;
    else
      throw BranchPointError(
          "wavefunction evaluated at the branch point x = ic");
  } else {
    prefactor = std::pow(t, s);
  }
  return prefactor * std::exp(-0.5 * t * t) *
         laguerre_eval(level.n, -level.q * params.alpha(), t * t);
}

struct SampledState {
  std::vector<std::complex<double>> values;
};

SampledState sample(const Wavefunction& f, const QuadratureGrid& grid) {
  SampledState s;
  s.values.resize(grid.nodes.size());
  for (size_t i = 0; i < grid.nodes.size(); ++i)
    s.values[i] = f(grid.nodes[i]);
  return s;
}

std::complex<double> integrate_product(const SampledState& f,
                                       const SampledState& g,
                                       const QuadratureGrid& grid) {
  // endpoint decay check against the on-grid peak
  double peak = 0.0;
  for (size_t i = 0; i < grid.nodes.size(); ++i)
    peak = std::max(peak, std::abs(f.values[i] * g.values[i]));
  const double tail = std::max(std::abs(f.values.front() * g.values.front()),
                               std::abs(f.values.back() * g.values.back()));
  if (peak > 0.0 && tail > kDecayThreshold * peak)
    throw QuadratureTruncationError(
        "integrand has not decayed at the quadrature endpoints; "
        "increase half_width");

  std::complex<double> sum = 0.0;
  for (size_t i = 0; i < grid.nodes.size(); ++i)
    sum += grid.weights[i] * f.values[i] * g.values[i];
  return sum;
}

}  // namespace

void WaveFunctionSpec::validate() const {
  LevelIndex checked(level.q, level.n);
  (void)checked;
  if (params.coupling() != 0.0 && params.shift() == 0.0)
    throw std::domain_error(
        "nonzero coupling requires a positive contour shift c");
}

Wavefunction::Wavefunction(const WaveFunctionSpec& spec,
                           const QuadratureSpec& quad)
    : spec_(spec), constant_(1.0) {
  spec_.validate();
  if (spec_.normalization == Normalization::Raw) return;

  WaveFunctionSpec raw = spec_;
  raw.normalization = Normalization::Raw;
  const Wavefunction raw_state(raw);
  const QuadratureGrid grid = QuadratureGrid::make(quad);
  const SampledState values = sample(raw_state, grid);

  std::complex<double> self = 0.0;
  double magnitude = 0.0;
  for (size_t i = 0; i < grid.nodes.size(); ++i) {
    self += grid.weights[i] * values.values[i] * values.values[i];
    magnitude += grid.weights[i] * std::norm(values.values[i]);
  }
  if (std::abs(self) < 1e-10 * magnitude)
    throw NormDegeneracyError(
        "self-product is degenerate (exceptional point at or near integer "
        "alpha); the state cannot be c-normalized");

  std::complex<double> c = 1.0 / std::sqrt(self);
  // fix the residual sign so the leading polynomial coefficient
  // C (-1)^n / n! has positive real part
  double lead = (spec_.level.n % 2 == 0) ? 1.0 : -1.0;
  const std::complex<double> leading = c * lead;
  if (leading.real() < 0.0 ||
      (leading.real() == 0.0 && leading.imag() < 0.0))
    c = -c;
  constant_ = c;
}

std::complex<double> Wavefunction::operator()(double x) const {
  return constant_ * raw_eval(spec_.level, spec_.params, x);
}

std::complex<double> wavefunction_eval(const WaveFunctionSpec& spec,
                                       double x) {
  return Wavefunction(spec)(x);
}

std::complex<double> c_product(const WaveFunctionSpec& f,
                               const WaveFunctionSpec& g,
                               const QuadratureSpec& quad) {
  if (f.params.shift() != g.params.shift())
    throw std::domain_error("c_product requires a common contour shift");
  const QuadratureGrid grid = QuadratureGrid::make(quad);
  const Wavefunction fw(f, quad), gw(g, quad);
  const SampledState fs = sample(fw, grid);
  const SampledState gs = (&f == &g) ? fs : sample(gw, grid);
  return integrate_product(fs, gs, grid);
}

RootSet nodal_zeros(const WaveFunctionSpec& spec) {
  spec.validate();
  RootSet roots;
  const double beta = -spec.level.q * spec.params.alpha();
  roots.poly_roots = laguerre_roots(spec.level.n, beta);
  const std::complex<double> ic(0.0, spec.params.shift());
  roots.x_zeros.reserve(2 * roots.poly_roots.size());
  for (const auto& z : roots.poly_roots) {
    const std::complex<double> root = std::sqrt(z);
    roots.x_zeros.push_back(ic + root);
    roots.x_zeros.push_back(ic - root);
  }
  if (spec.level.q == -1) roots.prefactor_zero = ic;
  return roots;
}

}  // namespace ptosc
