#ifndef PTOSC_MODEL_HPP
#define PTOSC_MODEL_HPP

#include <utility>
#include <vector>

namespace ptosc {

/// Bound-state label: quasi-parity q = +1 or -1 and radial-like index
/// n = 0, 1, 2, ... The q = +1 branch carries the prefactor exponent
/// -alpha + 1/2 and reduces to the even harmonic-oscillator states in the
/// Hermitian limit; q = -1 reduces to the odd ones.
struct LevelIndex {
  int q = 1;
  int n = 0;

  LevelIndex() = default;
  LevelIndex(int q, int n);

  bool operator==(const LevelIndex&) const = default;
};

struct EnergyLevel {
  LevelIndex level;
  double energy = 0.0;
};

/// Potential parameters: alpha > 0 fixing the core strength
/// G = alpha^2 - 1/4, and the contour shift c >= 0 that moves the x^-2
/// singularity to x = ic, off the integration path. G is always derived
/// from alpha, never stored separately.
class ModelParams {
 public:
  static ModelParams from_alpha(double alpha, double shift);
  static ModelParams from_coupling(double coupling, double shift);

  double alpha() const { return alpha_; }
  double shift() const { return shift_; }
  double coupling() const { return alpha_ * alpha_ - 0.25; }

 private:
  ModelParams(double alpha, double shift);

  double alpha_;
  double shift_;
};

/// alpha = sqrt(G + 1/4). Throws std::domain_error for G <= -1/4
/// (supercritical attraction).
double alpha_from_coupling(double coupling);

/// G = alpha^2 - 1/4. Throws std::domain_error for alpha <= 0.
double coupling_from_alpha(double alpha);

/// Closed-form energy E = 4n + 2 - 2 q alpha, in oscillator units and
/// before the constant c^2 shift of the numerical eigenvalues.
double exact_energy(LevelIndex level, double alpha);

/// The k lowest levels over both quasi-parities, ascending in energy.
/// Equal energies (integer alpha) list q = -1 first. The q = +1 energies
/// decrease with alpha without bound, so candidates are enumerated deep
/// enough that no low level is missed at large alpha.
std::vector<EnergyLevel> spectrum(double alpha, int k);

/// Number of real nodal zeros of the wave function in the Hermitian limit
/// (alpha -> 1/2, c -> 0): 2n for q = +1, 2n + 1 for q = -1.
int hermitian_limit_node_count(LevelIndex level);

struct Crossing {
  int alpha;  // crossings sit exactly at integer alpha
  std::vector<std::pair<LevelIndex, LevelIndex>> pairs;
};

/// Unavoided level crossings at every integer alpha = k <= alpha_max:
/// level (+1, n+k) meets (-1, n) for n = 0 .. n_ceiling. Each reported
/// pair is re-checked against exact_energy.
std::vector<Crossing> crossings(double alpha_max, int n_ceiling = 5);

}  // namespace ptosc

#endif  // PTOSC_MODEL_HPP
