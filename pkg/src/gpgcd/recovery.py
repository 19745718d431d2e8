"""Recover the GCD from a converged iterate and correct ``F~``, ``G~``.

At a feasible point ``A F~ + B G~ = 0``, so with ``F~ = H F_bar`` and
``G~ = H G_bar`` the cofactors are ``A = t G_bar``, ``B = -t F_bar``.  The
two least-squares quotients ``G~ / A`` and ``F~ / B`` therefore come out
with opposite signs.  Candidates are scored against the signed cofactor
pair ``(-B, A)`` under both signs of ``H``, and the best one wins.
"""
from dataclasses import dataclass
import logging

import numpy as np

from .linalg import RankDeficiencyError, complex_to_real_block, real_to_complex, solve_least_squares
from .optimizer import OptimizerConfig, Problem, run
from .poly import Poly, DegreeError, convolution_matrix

log = logging.getLogger(__name__)


class RecoveryError(RuntimeError):
    """No GCD candidate reproduces the iterate; it was not really feasible."""


@dataclass
class ApproxGcdResult:
    """Approximate GCD with the corrected polynomial pair.

    ``F_tilde == H * B`` and ``G_tilde == H * A`` hold by construction.
    ``A`` and ``B`` are the sign-adjusted cofactors, so ``B`` here is the
    negated ``B`` of the optimizer iterate.
    """

    H: Poly
    F_tilde: Poly
    G_tilde: Poly
    A: Poly
    B: Poly
    perturbation: float
    iterations: int
    residual_chosen: float
    candidate_used: str
    degenerate_leading_coefficient: bool = False
    swapped: bool = False

    def normalized_gcd(self, index=None):
        """``H`` scaled to unit norm with its largest coefficient real positive."""
        return normalize_gauge(self.H, index)


def normalize_gauge(p, index=None):
    """Fix the scalar freedom of a GCD: unit 2-norm, one coefficient real positive.

    The pinned coefficient is the largest in magnitude unless ``index``
    is given.  Pass the index chosen for a reference polynomial when
    comparing two GCDs, since near-ties in magnitude make argmax unstable.
    """
    c = np.asarray(p.coeffs)
    k = int(np.argmax(np.abs(c))) if index is None else index
    return Poly(c * (abs(c[k]) / c[k]) / np.linalg.norm(c))


def least_squares_divide(target, cofactor, d):
    """Degree-``d`` ``H`` minimizing ``||cofactor * H - target||_2``.

    Solves the real embedding of ``C_d(cofactor) h = desc(target)`` in the
    least-squares sense rather than doing long division.
    """
    target = target if isinstance(target, Poly) else Poly(target)
    cofactor = cofactor if isinstance(cofactor, Poly) else Poly(cofactor)
    if cofactor.degree + d != target.degree:
        raise DegreeError(
            f"deg(cofactor) + d = {cofactor.degree + d} != deg(target) = {target.degree}")
    cmat = complex_to_real_block(convolution_matrix(cofactor, d))
    h = solve_least_squares(cmat, complex_to_real_block(target.desc()))
    return Poly.from_desc(real_to_complex(h))


def _residual(f, g, h, b_signed, a_signed):
    return (f - h * b_signed).norm2_sq() + (g - h * a_signed).norm2_sq()


def recover_gcd(x, problem, iterations=0):
    """Compute ``H`` from a converged decision vector and correct the pair.

    Raises
    ------
    RecoveryError
        If every candidate leaves a residual above ``10 (||F~||^2 + ||G~||^2)``
        or both least-squares systems are rank deficient.
    """
    f, g, a, b = problem.unpack(x)
    d = problem.d
    b_signed, a_signed = -b, a

    candidates = []
    for label, target, cof in (("from_A", g, a), ("from_B", f, b)):
        try:
            candidates.append((label, least_squares_divide(target, cof, d)))
        except RankDeficiencyError as err:
            log.debug("candidate %s skipped: %s", label, err)
    if not candidates:
        raise RecoveryError("both cofactors are numerically zero")

    best = None
    for label, h in candidates:
        for sign in (1.0, -1.0):
            hs = h * sign
            r = _residual(f, g, hs, b_signed, a_signed)
            if best is None or r < best[0]:
                best = (r, label, hs)
    r, label, h = best
    bound = 10.0 * (f.norm2_sq() + g.norm2_sq())
    if not r <= bound:
        raise RecoveryError(f"best GCD residual {r:.3e} exceeds {bound:.3e}")

    F_t = h * b_signed
    G_t = h * a_signed
    pert = (F_t - problem.F).norm2_sq() + (G_t - problem.G).norm2_sq()
    lead = abs(h.coeffs[-1])
    return ApproxGcdResult(
        H=h, F_tilde=F_t, G_tilde=G_t, A=a_signed, B=b_signed,
        perturbation=pert, iterations=iterations, residual_chosen=r,
        candidate_used=label,
        degenerate_leading_coefficient=bool(lead < 1e-12 * h.norm()),
    )


def approx_gcd(F, G, d, config=None):
    """Approximate GCD of degree ``d`` of two complex polynomials.

    Runs the constrained iteration and the recovery step.  If
    ``deg F < deg G`` the inputs are swapped internally; the returned
    ``F_tilde``/``G_tilde`` always correspond to the caller's ``F``/``G``.

    Parameters
    ----------
    F, G : Poly or array_like
        Inputs; array input is read as ascending coefficients.
    d : int
        Degree of the approximate GCD, ``0 < d <= min(deg F, deg G)``.
    config : OptimizerConfig, optional

    Returns
    -------
    ApproxGcdResult
    """
    F = F if isinstance(F, Poly) else Poly(F)
    G = G if isinstance(G, Poly) else Poly(G)
    swapped = F.degree < G.degree
    if swapped:
        F, G = G, F
    problem = Problem(F, G, d)
    state = run(problem, config or OptimizerConfig())
    res = recover_gcd(state.x, problem, iterations=state.iteration)
    if swapped:
        res.F_tilde, res.G_tilde = res.G_tilde, res.F_tilde
        res.A, res.B = res.B, res.A
        res.swapped = True
    return res
