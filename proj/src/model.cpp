#include "ptosc/model.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace ptosc {

LevelIndex::LevelIndex(int q, int n) : q(q), n(n) {
  if (q != 1 && q != -1)
    throw std::domain_error("quasi-parity must be +1 or -1, got " +
                            std::to_string(q));
  if (n < 0)
    throw std::domain_error("level index n must be nonnegative, got " +
                            std::to_string(n));
}

ModelParams::ModelParams(double alpha, double shift)
    : alpha_(alpha), shift_(shift) {
  if (!(alpha > 0.0))
    throw std::domain_error("alpha must be positive, got " +
                            std::to_string(alpha));
  if (!(shift >= 0.0))
    throw std::domain_error("contour shift c must be nonnegative, got " +
                            std::to_string(shift));
}

ModelParams ModelParams::from_alpha(double alpha, double shift) {
  return ModelParams(alpha, shift);
}

ModelParams ModelParams::from_coupling(double coupling, double shift) {
  return ModelParams(alpha_from_coupling(coupling), shift);
}

double alpha_from_coupling(double coupling) {
  if (!(coupling > -0.25))
    throw std::domain_error(
        "supercritical attraction: coupling must exceed -1/4, got " +
        std::to_string(coupling));
  return std::sqrt(coupling + 0.25);
}

double coupling_from_alpha(double alpha) {
  if (!(alpha > 0.0))
    throw std::domain_error("alpha must be positive, got " +
                            std::to_string(alpha));
  return alpha * alpha - 0.25;
}

double exact_energy(LevelIndex level, double alpha) {
  if (!(alpha > 0.0))
    throw std::domain_error("alpha must be positive, got " +
                            std::to_string(alpha));
  LevelIndex checked(level.q, level.n);
  return 4.0 * checked.n + 2.0 - 2.0 * checked.q * alpha;
}

std::vector<EnergyLevel> spectrum(double alpha, int k) {
  if (k < 1) throw std::domain_error("spectrum requires k >= 1");
  if (!(alpha > 0.0))
    throw std::domain_error("alpha must be positive, got " +
                            std::to_string(alpha));

  // The q=+1 ladder starts at 2 - 2 alpha, which sinks below every fixed
  // energy as alpha grows; enumerate deep enough on both branches.
  const int n_max = k + static_cast<int>(std::ceil(alpha / 2.0)) + 2;
  std::vector<EnergyLevel> levels;
  levels.reserve(2 * (n_max + 1));
  for (int n = 0; n <= n_max; ++n)
    for (int q : {1, -1})
      levels.push_back({LevelIndex(q, n), exact_energy(LevelIndex(q, n), alpha)});

  std::stable_sort(levels.begin(), levels.end(),
                   [](const EnergyLevel& a, const EnergyLevel& b) {
                     if (a.energy != b.energy) return a.energy < b.energy;
                     return a.level.q < b.level.q;  // q = -1 first on ties
                   });
  levels.resize(static_cast<size_t>(k));
  return levels;
}

int hermitian_limit_node_count(LevelIndex level) {
  LevelIndex checked(level.q, level.n);
  return 2 * checked.n + (1 - checked.q) / 2;
}

std::vector<Crossing> crossings(double alpha_max, int n_ceiling) {
  if (!(alpha_max > 0.0))
    throw std::domain_error("alpha_max must be positive");
  if (n_ceiling < 0) throw std::domain_error("n_ceiling must be nonnegative");

  std::vector<Crossing> out;
  for (int k = 1; k <= static_cast<int>(std::floor(alpha_max)); ++k) {
    Crossing c;
    c.alpha = k;
    for (int n = 0; n <= n_ceiling; ++n) {
      LevelIndex upper(1, n + k), lower(-1, n);
      // coincidence is exact in floating point: both sides are integers
      if (exact_energy(upper, k) != exact_energy(lower, k))
        throw std::logic_error("crossing identity violated");
      c.pairs.emplace_back(upper, lower);
    }
    out.push_back(std::move(c));
  }
  return out;
}

}  // namespace ptosc
