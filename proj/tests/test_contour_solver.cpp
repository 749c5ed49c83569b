#include <cmath>
#include <complex>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "ptosc/contour_solver.hpp"
#include "ptosc/errors.hpp"
#include "ptosc/model.hpp"

using namespace ptosc;
using cplx = std::complex<double>;

namespace {

Discretization quick_grid(double half_width, int points,
                          Scheme scheme = Scheme::FD4) {
  return Discretization{half_width, points, scheme};
}

}  // namespace

TEST_SUITE_BEGIN("contour_solver");

TEST_CASE("potential values") {
  // G = 0, c = 1, x = 0: every term vanishes
  const auto free_params = ModelParams::from_alpha(0.5, 1.0);
  CHECK(std::abs(potential_eval(free_params, 0.0)) == 0.0);

  // alpha = 1 (G = 3/4), c = 1, x = 0: G/(-i)^2 = -3/4
  const auto crossing = ModelParams::from_alpha(1.0, 1.0);
  const cplx v = potential_eval(crossing, 0.0);
  CHECK(v.real() == doctest::Approx(-0.75).epsilon(1e-14));
  CHECK(std::abs(v.imag()) < 1e-15);

  // singular on the unshifted contour
  const auto singular = ModelParams::from_coupling(1.0, 0.0);
  CHECK_THROWS_AS(potential_eval(singular, 0.0), SingularPotentialError);
  CHECK(std::abs(potential_eval(singular, 0.5)) > 0.0);
}

TEST_CASE("hermitian reduction: FD2 free oscillator matrix") {
  const auto params = ModelParams::from_alpha(0.5, 0.0);
  const auto disc = quick_grid(4.0, 16, Scheme::FD2);
  const auto m = build_hamiltonian(params, disc);
  const double h = disc.step();
  for (int i = 0; i < 16; ++i) {
    const double x = disc.node(i);
    CHECK(m(i, i) == cplx(2.0 / (h * h) + x * x));
    CHECK(m(i, i).imag() == 0.0);
    if (i + 1 < 16) {
      CHECK(m(i, i + 1) == cplx(-1.0 / (h * h)));
      CHECK(m(i + 1, i) == cplx(-1.0 / (h * h)));
    }
    if (i + 2 < 16) CHECK(m(i, i + 2) == cplx(0.0));
  }
}

TEST_CASE("matrix is complex symmetric to the last bit") {
  const auto params = ModelParams::from_alpha(1.0, 1.0);
  for (Scheme scheme : {Scheme::FD2, Scheme::FD4}) {
    const auto disc = quick_grid(6.0, 41, scheme);
    const auto m = build_hamiltonian(params, disc);
    for (int i = 0; i < 41; ++i)
      for (int j = i + 1; j < 41; ++j) CHECK(m(i, j) == m(j, i));
  }
}

TEST_CASE("diagonal entry on the x = 0 node") {
  // L = 5, N = 19 puts node j = 9 exactly at the origin
  const auto params = ModelParams::from_alpha(1.0, 1.0);
  const auto disc = quick_grid(5.0, 19, Scheme::FD2);
  CHECK(disc.node(9) == 0.0);
  const auto m = build_hamiltonian(params, disc);
  const double h = disc.step();
  CHECK(m(9, 9).real() == doctest::Approx(2.0 / (h * h) - 0.75).epsilon(1e-14));
  CHECK(std::abs(m(9, 9).imag()) < 1e-15);
}

TEST_CASE("singular contour rejected at assembly") {
  const auto params = ModelParams::from_coupling(1.0, 0.0);
  CHECK_THROWS_AS(build_hamiltonian(params, quick_grid(6.0, 32)),
                  std::domain_error);
}

TEST_CASE("hermitian-limit eigenvalues 2m+1") {
  const auto params = ModelParams::from_alpha(0.5, 0.0);
  const auto result = solve_spectrum(params, quick_grid(8.0, 301), 4);
  REQUIRE(result.eigenvalues.size() == 4);
  for (int m = 0; m < 4; ++m) {
    CHECK(result.eigenvalues[m].real() ==
          doctest::Approx(2.0 * m + 1.0).epsilon(1e-4));
    CHECK(std::abs(result.eigenvalues[m].imag()) < 1e-8);
    CHECK(result.residuals[m] < 1e-8);
    CHECK(result.boundary_weights[m] < 1e-6);
  }
}

TEST_CASE("spectrum shifts by exactly c^2") {
  const auto disc = quick_grid(8.0, 301);
  const auto at_zero =
      solve_spectrum(ModelParams::from_alpha(0.5, 0.0), disc, 4);
  const auto at_one =
      solve_spectrum(ModelParams::from_alpha(0.5, 1.0), disc, 4);
  for (int m = 0; m < 4; ++m)
    CHECK(at_one.eigenvalues[m].real() - 1.0 ==
          doctest::Approx(at_zero.eigenvalues[m].real()).epsilon(2e-5));
}

TEST_CASE("both quasi-parity families are recovered") {
  // alpha = 1.5: exact energies -1, 3, 5, 7 (the lowest four)
  const auto params = ModelParams::from_alpha(1.5, 1.0);
  const auto result = solve_spectrum(params, quick_grid(8.0, 301), 4);
  const std::vector<double> expected{-1.0, 3.0, 5.0, 7.0};
  for (int m = 0; m < 4; ++m)
    CHECK(result.eigenvalues[m].real() - 1.0 ==
          doctest::Approx(expected[m]).epsilon(5e-5).scale(1.0));
}

TEST_CASE("preconditions of solve_spectrum") {
  const auto params = ModelParams::from_alpha(0.5, 1.0);
  CHECK_THROWS_AS(solve_spectrum(params, quick_grid(8.0, 64), 17),
                  std::domain_error);  // k > N/4
  CHECK_THROWS_AS(solve_spectrum(params, quick_grid(8.0, 301), 0),
                  std::domain_error);
}

TEST_CASE("a cramped box fails the quality filters") {
  // states leak into the boundary for L = 2.5; nothing clean remains
  const auto params = ModelParams::from_alpha(0.5, 0.0);
  CHECK_THROWS_AS(solve_spectrum(params, quick_grid(2.5, 64), 10),
                  InsufficientResolutionError);
  try {
    solve_spectrum(params, quick_grid(2.5, 64), 10);
  } catch (const InsufficientResolutionError& e) {
    CHECK(e.requested == 10);
    CHECK(e.accepted < 10);
    CHECK(e.scanned == 64);
  }
}

TEST_CASE("match_exact on synthetic perfect input") {
  const auto params = ModelParams::from_alpha(0.7, 0.0);
  EigenSolveResult synthetic;
  synthetic.grid = quick_grid(10.0, 1500);
  for (const auto& level : spectrum(0.7, 6)) {
    synthetic.eigenvalues.push_back(level.energy);
    synthetic.residuals.push_back(0.0);
    synthetic.boundary_weights.push_back(0.0);
  }
  const auto report = match_exact(synthetic, params);
  CHECK(report.max_abs_error == 0.0);
  CHECK(report.unmatched.empty());
  CHECK_FALSE(report.ambiguous);
  REQUIRE(report.entries.size() == 6);
  CHECK(report.entries[0].level == LevelIndex(1, 0));
  CHECK(report.entries[1].level == LevelIndex(-1, 0));

  // adding and subtracting the c^2 shift costs at most an ulp
  const auto shifted_params = ModelParams::from_alpha(0.7, 1.0);
  EigenSolveResult shifted = synthetic;
  for (auto& lam : shifted.eigenvalues) lam += 1.0;
  CHECK(match_exact(shifted, shifted_params).max_abs_error < 1e-14);
}

TEST_CASE("match_exact against a real solve") {
  const auto params = ModelParams::from_alpha(0.3, 0.5);
  const auto result = solve_spectrum(params, quick_grid(8.0, 301), 5);
  const auto report = match_exact(result, params);
  CHECK(report.entries.size() == 5);
  CHECK(report.unmatched.empty());
  CHECK_FALSE(report.ambiguous);
  CHECK(report.max_abs_error < 1e-4);
}

TEST_CASE("crossing pair is matched to both coincident levels") {
  const auto params = ModelParams::from_alpha(1.0, 1.0);
  const auto result = solve_spectrum(params, quick_grid(9.0, 401), 4);
  const auto report = match_exact(result, params);
  CHECK_FALSE(report.ambiguous);
  std::vector<LevelIndex> at_four;
  for (const auto& entry : report.entries)
    if (entry.exact_energy == 4.0) at_four.push_back(entry.level);
  REQUIRE(at_four.size() == 2);
  CHECK(at_four[0] != at_four[1]);
}

TEST_CASE("a genuinely skipped level flags ambiguity") {
  const auto params = ModelParams::from_alpha(0.5, 0.0);
  EigenSolveResult synthetic;
  synthetic.grid = quick_grid(10.0, 1500);
  for (double lam : {1.0, 1.05, 7.0}) {
    synthetic.eigenvalues.push_back(lam);
    synthetic.residuals.push_back(0.0);
    synthetic.boundary_weights.push_back(0.0);
  }
  const auto report = match_exact(synthetic, params);
  CHECK(report.ambiguous);
  CHECK_FALSE(report.notes.empty());
}

TEST_CASE("order estimator on synthetic errors") {
  const std::vector<double> steps{0.1, 0.05, 0.025};
  std::vector<double> quadratic, cubic;
  for (double h : steps) {
    quadratic.push_back(h * h);
    cubic.push_back(2.0 * h * h * h);
  }
  CHECK(*estimate_order(steps, quadratic) == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(*estimate_order(steps, cubic) == doctest::Approx(3.0).epsilon(1e-12));

  CHECK_FALSE(estimate_order(steps, {1e-3, 2e-3, 1e-3}).has_value());
  CHECK_FALSE(estimate_order(steps, {1e-3, 1e-3, 1e-3}).has_value());
  CHECK_FALSE(estimate_order({0.1}, {1e-3}).has_value());
}

TEST_CASE("observed convergence orders on coarse grids") {
  const auto params = ModelParams::from_alpha(0.5, 1.0);

  const auto fd2 = convergence_order(params, {120, 180, 270}, 3, Scheme::FD2, 8.0);
  REQUIRE(fd2.order.has_value());
  CHECK(*fd2.order > 1.6);
  CHECK(*fd2.order < 2.4);

  const auto fd4 = convergence_order(params, {120, 180, 270}, 3, Scheme::FD4, 8.0);
  REQUIRE(fd4.order.has_value());
  CHECK(*fd4.order > 3.5);
  CHECK(*fd4.order < 4.5);

  CHECK_THROWS_AS(convergence_order(params, {100, 200}, 3, Scheme::FD2, 8.0),
                  std::domain_error);
  CHECK_THROWS_AS(convergence_order(params, {200, 150, 300}, 3, Scheme::FD2, 8.0),
                  std::domain_error);
}

TEST_SUITE_END();
