#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "ptosc/contour_solver.hpp"
#include "ptosc/errors.hpp"
#include "ptosc/model.hpp"
#include "ptosc/perturbation.hpp"
#include "ptosc/quadrature.hpp"
#include "ptosc/special.hpp"
#include "ptosc/wavefunction.hpp"

namespace py = pybind11;
using namespace ptosc;

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exactly solvable oscillator with a complex-shifted "
            "inverse-square core: closed-form spectrum, analytic wave "
            "functions, a non-Hermitian finite-difference eigensolver, and "
            "Rayleigh-Schrodinger cross checks.";

  py::register_exception<QuadratureTruncationError>(
      m, "QuadratureTruncationError", PyExc_RuntimeError);
  py::register_exception<NormDegeneracyError>(m, "NormDegeneracyError",
                                              PyExc_RuntimeError);
  py::register_exception<InsufficientResolutionError>(
      m, "InsufficientResolutionError", PyExc_RuntimeError);
  py::register_exception<NonConvergenceError>(m, "NonConvergenceError",
                                              PyExc_RuntimeError);

  py::class_<LevelIndex>(m, "LevelIndex")
      .def(py::init<int, int>(), py::arg("q"), py::arg("n"))
      .def_readonly("q", &LevelIndex::q)
      .def_readonly("n", &LevelIndex::n)
      .def(py::self == py::self)
      .def("__repr__", [](const LevelIndex& lv) {
        std::ostringstream os;
        os << "LevelIndex(q=" << lv.q << ", n=" << lv.n << ")";
        return os.str();
      });

  py::class_<EnergyLevel>(m, "EnergyLevel")
      .def_readonly("level", &EnergyLevel::level)
      .def_readonly("energy", &EnergyLevel::energy)
      .def("__repr__", [](const EnergyLevel& lv) {
        std::ostringstream os;
        os << "EnergyLevel(q=" << lv.level.q << ", n=" << lv.level.n
           << ", energy=" << lv.energy << ")";
        return os.str();
      });

  py::class_<ModelParams>(m, "ModelParams")
      .def_static("from_alpha", &ModelParams::from_alpha, py::arg("alpha"),
                  py::arg("shift"))
      .def_static("from_coupling", &ModelParams::from_coupling,
                  py::arg("coupling"), py::arg("shift"))
      .def_property_readonly("alpha", &ModelParams::alpha)
      .def_property_readonly("shift", &ModelParams::shift)
      .def_property_readonly("coupling", &ModelParams::coupling)
      .def("__repr__", [](const ModelParams& p) {
        std::ostringstream os;
        os << "ModelParams(alpha=" << p.alpha() << ", shift=" << p.shift()
           << ")";
        return os.str();
      });

  m.def("alpha_from_coupling", &alpha_from_coupling, py::arg("coupling"));
  m.def("coupling_from_alpha", &coupling_from_alpha, py::arg("alpha"));
  m.def("exact_energy", &exact_energy, py::arg("level"), py::arg("alpha"),
        "Closed-form energy 4n + 2 - 2 q alpha.");
  m.def("spectrum", &spectrum, py::arg("alpha"), py::arg("k"),
        "The k lowest levels over both quasi-parities, ascending.");
  m.def("hermitian_limit_node_count", &hermitian_limit_node_count,
        py::arg("level"));

  py::class_<Crossing>(m, "Crossing")
      .def_readonly("alpha", &Crossing::alpha)
      .def_readonly("pairs", &Crossing::pairs);
  m.def("crossings", &crossings, py::arg("alpha_max"),
        py::arg("n_ceiling") = 5);

  m.def("laguerre_eval", &laguerre_eval, py::arg("n"), py::arg("beta"),
        py::arg("z"),
        "Generalized Laguerre polynomial, standard normalization.");
  m.def("laguerre_derivative", &laguerre_derivative, py::arg("n"),
        py::arg("beta"), py::arg("z"));
  m.def("laguerre_factorization_residual", &laguerre_factorization_residual,
        py::arg("n"), py::arg("z"));
  m.def("kummer_series", &kummer_series, py::arg("a"), py::arg("b"),
        py::arg("z"), py::arg("tol") = 1e-14,
        "Confluent hypergeometric 1F1 by direct summation.");
  m.def("laguerre_coefficients", &laguerre_coefficients, py::arg("n"),
        py::arg("beta"));
  m.def("laguerre_roots", &laguerre_roots, py::arg("n"), py::arg("beta"));

  py::enum_<QuadratureRule>(m, "QuadratureRule")
      .value("Trapezoid", QuadratureRule::Trapezoid)
      .value("GaussLegendre", QuadratureRule::GaussLegendre);

  py::class_<QuadratureSpec>(m, "QuadratureSpec")
      .def(py::init([](double half_width, int points, QuadratureRule rule) {
             return QuadratureSpec{half_width, points, rule};
           }),
           py::arg("half_width") = 12.0, py::arg("points") = 4000,
           py::arg("rule") = QuadratureRule::Trapezoid)
      .def_readwrite("half_width", &QuadratureSpec::half_width)
      .def_readwrite("points", &QuadratureSpec::points)
      .def_readwrite("rule", &QuadratureSpec::rule);

  py::enum_<Normalization>(m, "Normalization")
      .value("Raw", Normalization::Raw)
      .value("CNormalized", Normalization::CNormalized);

  py::class_<WaveFunctionSpec>(m, "WaveFunctionSpec")
      .def(py::init([](LevelIndex level, const ModelParams& params,
                       Normalization normalization) {
             return WaveFunctionSpec{level, params, normalization};
           }),
           py::arg("level"), py::arg("params"),
           py::arg("normalization") = Normalization::Raw)
      .def_readwrite("level", &WaveFunctionSpec::level)
      .def_readwrite("params", &WaveFunctionSpec::params)
      .def_readwrite("normalization", &WaveFunctionSpec::normalization);

  py::class_<Wavefunction>(m, "Wavefunction")
      .def(py::init<const WaveFunctionSpec&, const QuadratureSpec&>(),
           py::arg("spec"), py::arg("quad") = QuadratureSpec{})
      .def("__call__", &Wavefunction::operator(), py::arg("x"))
      .def("__call__",
           [](const Wavefunction& wf, const std::vector<double>& xs) {
             std::vector<std::complex<double>> out;
             out.reserve(xs.size());
             for (double x : xs) out.push_back(wf(x));
             return out;
           })
      .def_property_readonly("constant", &Wavefunction::constant)
      .def_property_readonly("spec", &Wavefunction::spec);

  m.def("wavefunction_eval", &wavefunction_eval, py::arg("spec"),
        py::arg("x"));
  m.def("c_product", &c_product, py::arg("f"), py::arg("g"),
        py::arg("quad") = QuadratureSpec{},
        "Unconjugated bilinear product of two states on the shared contour.");

  py::class_<RootSet>(m, "RootSet")
      .def_readonly("poly_roots", &RootSet::poly_roots)
      .def_readonly("x_zeros", &RootSet::x_zeros)
      .def_readonly("prefactor_zero", &RootSet::prefactor_zero);
  m.def("nodal_zeros", &nodal_zeros, py::arg("spec"));

  py::enum_<Scheme>(m, "Scheme")
      .value("FD2", Scheme::FD2)
      .value("FD4", Scheme::FD4);

  py::class_<Discretization>(m, "Discretization")
      .def(py::init([](double half_width, int points, Scheme scheme) {
             return Discretization{half_width, points, scheme};
           }),
           py::arg("half_width") = 10.0, py::arg("points") = 1500,
           py::arg("scheme") = Scheme::FD4)
      .def_readwrite("half_width", &Discretization::half_width)
      .def_readwrite("points", &Discretization::points)
      .def_readwrite("scheme", &Discretization::scheme)
      .def("step", &Discretization::step)
      .def("node", &Discretization::node, py::arg("j"));

  m.def("potential_eval", &potential_eval, py::arg("params"), py::arg("x"),
        "x^2 - 2icx + G/(x - ic)^2.");
  m.def("build_hamiltonian", &build_hamiltonian, py::arg("params"),
        py::arg("disc"),
        "Dense complex-symmetric discrete Hamiltonian (numpy array).");

  py::class_<EigenSolveResult>(m, "EigenSolveResult")
      .def_readonly("eigenvalues", &EigenSolveResult::eigenvalues)
      .def_readonly("residuals", &EigenSolveResult::residuals)
      .def_readonly("boundary_weights", &EigenSolveResult::boundary_weights)
      .def_readonly("grid", &EigenSolveResult::grid);
  m.def("solve_spectrum", &solve_spectrum, py::arg("params"), py::arg("disc"),
        py::arg("k"), py::call_guard<py::gil_scoped_release>());

  py::class_<MatchEntry>(m, "MatchEntry")
      .def_readonly("eigenvalue", &MatchEntry::eigenvalue)
      .def_readonly("level", &MatchEntry::level)
      .def_readonly("exact_energy", &MatchEntry::exact_energy)
      .def_readonly("abs_error", &MatchEntry::abs_error);
  py::class_<MatchReport>(m, "MatchReport")
      .def_readonly("entries", &MatchReport::entries)
      .def_readonly("max_abs_error", &MatchReport::max_abs_error)
      .def_readonly("unmatched", &MatchReport::unmatched)
      .def_readonly("ambiguous", &MatchReport::ambiguous)
      .def_readonly("notes", &MatchReport::notes);
  m.def("match_exact", &match_exact, py::arg("result"), py::arg("params"));

  m.def("estimate_order", &estimate_order, py::arg("steps"),
        py::arg("errors"));

  py::class_<ConvergenceReport::PerLevel>(m, "ConvergenceLevel")
      .def_readonly("level", &ConvergenceReport::PerLevel::level)
      .def_readonly("errors", &ConvergenceReport::PerLevel::errors)
      .def_readonly("order", &ConvergenceReport::PerLevel::order);
  py::class_<ConvergenceReport>(m, "ConvergenceReport")
      .def_readonly("levels", &ConvergenceReport::levels)
      .def_readonly("steps", &ConvergenceReport::steps)
      .def_readonly("order", &ConvergenceReport::order);
  m.def("convergence_order", &convergence_order, py::arg("params"),
        py::arg("point_counts"), py::arg("level_count"), py::arg("scheme"),
        py::arg("half_width") = 10.0,
        py::call_guard<py::gil_scoped_release>());

  py::class_<WComponents>(m, "WComponents")
      .def_readonly("w1", &WComponents::w1)
      .def_readonly("w2", &WComponents::w2)
      .def_readonly("w3", &WComponents::w3)
      .def("sum", &WComponents::sum);
  m.def("w_components", &w_components, py::arg("x"), py::arg("shift"));

  py::class_<CoreDecomposition>(m, "CoreDecomposition")
      .def_readonly("shift", &CoreDecomposition::shift)
      .def_readonly("mu", &CoreDecomposition::mu)
      .def_readonly("g", &CoreDecomposition::g)
      .def_readonly("lam", &CoreDecomposition::lam);
  m.def("reparameterize", &reparameterize, py::arg("shift"));

  m.def("rs_first_order", &rs_first_order, py::arg("level"), py::arg("shift"),
        py::arg("quad") = QuadratureSpec{});

  py::class_<RSResult>(m, "RSResult")
      .def_readonly("level", &RSResult::level)
      .def_readonly("order", &RSResult::order)
      .def_readonly("value", &RSResult::value)
      .def_readonly("basis_size", &RSResult::basis_size)
      .def_readonly("basis_delta", &RSResult::basis_delta);
  m.def("rs_second_order", &rs_second_order, py::arg("level"),
        py::arg("shift"), py::arg("basis_size"),
        py::arg("quad") = QuadratureSpec{});

  py::class_<PerturbativeComparison>(m, "PerturbativeComparison")
      .def_readonly("level", &PerturbativeComparison::level)
      .def_readonly("coupling", &PerturbativeComparison::coupling)
      .def_readonly("exact", &PerturbativeComparison::exact)
      .def_readonly("unperturbed", &PerturbativeComparison::unperturbed)
      .def_readonly("first_order", &PerturbativeComparison::first_order)
      .def_readonly("second_order", &PerturbativeComparison::second_order)
      .def_readonly("perturbative", &PerturbativeComparison::perturbative)
      .def_readonly("residual", &PerturbativeComparison::residual);
  m.def("exact_vs_perturbative", &exact_vs_perturbative, py::arg("level"),
        py::arg("coupling"), py::arg("shift"), py::arg("basis_size"),
        py::arg("quad") = QuadratureSpec{});

#ifdef VERSION_INFO
  m.attr("__version__") = VERSION_INFO;
#else
  m.attr("__version__") = "dev";
#endif
}
