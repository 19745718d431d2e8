"""Approximate GCD of univariate polynomials with complex coefficients.

The perturbed pair and its GCD are found by equality-constrained
minimization (a modified Newton iteration on the subresultant
constraint), followed by least-squares division to extract the GCD.

>>> from gpgcd import Poly, approx_gcd
>>> F = Poly.from_roots([1, -2])
>>> G = Poly.from_roots([1, 3])
>>> res = approx_gcd(F, G, 1)
>>> res.perturbation < 1e-8
True
"""
from .linalg import RankDeficiencyError
from .optimizer import NonConvergenceError, OptimizerConfig, Problem, run
from .poly import DegreeError, Poly, convolution_matrix, subresultant_matrix
from .recovery import ApproxGcdResult, RecoveryError, approx_gcd, recover_gcd

__version__ = "0.1.0"

__all__ = [
    "ApproxGcdResult", "DegreeError", "NonConvergenceError", "OptimizerConfig",
    "Poly", "Problem", "RankDeficiencyError", "RecoveryError", "approx_gcd",
    "convolution_matrix", "recover_gcd", "run", "subresultant_matrix",
]
