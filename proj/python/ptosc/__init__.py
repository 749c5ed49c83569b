"""PT-symmetric oscillator with a complex-shifted inverse-square core.

Closed-form spectrum and wave functions, a dense non-Hermitian
finite-difference eigensolver on the shifted contour, and
Rayleigh-Schrodinger perturbation cross-checks, all backed by the C++
core in ptosc._core.
"""

from ._core import (
    ConvergenceLevel,
    ConvergenceReport,
    CoreDecomposition,
    Crossing,
    Discretization,
    EigenSolveResult,
    EnergyLevel,
    InsufficientResolutionError,
    LevelIndex,
    MatchEntry,
    MatchReport,
    ModelParams,
    NonConvergenceError,
    NormDegeneracyError,
    Normalization,
    PerturbativeComparison,
    QuadratureRule,
    QuadratureSpec,
    QuadratureTruncationError,
    RSResult,
    RootSet,
    Scheme,
    WComponents,
    WaveFunctionSpec,
    Wavefunction,
    __version__,
    alpha_from_coupling,
    build_hamiltonian,
    c_product,
    convergence_order,
    coupling_from_alpha,
    crossings,
    estimate_order,
    exact_energy,
    exact_vs_perturbative,
    hermitian_limit_node_count,
    kummer_series,
    laguerre_coefficients,
    laguerre_derivative,
    laguerre_eval,
    laguerre_factorization_residual,
    laguerre_roots,
    match_exact,
    nodal_zeros,
    potential_eval,
    reparameterize,
    rs_first_order,
    rs_second_order,
    solve_spectrum,
    spectrum,
    w_components,
    wavefunction_eval,
)

__all__ = [name for name in dir() if not name.startswith("_")] + ["__version__"]
