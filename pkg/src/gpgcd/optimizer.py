"""Constrained minimization for the approximate GCD problem.

Given ``F`` (degree ``m``), ``G`` (degree ``n``) and a target degree
``d``, find perturbed ``F~``, ``G~`` and cofactors ``A``, ``B`` with
``A F~ + B G~ = 0`` and ``||A||^2 + ||B||^2 = 1`` that minimize
``||F~ - F||^2 + ||G~ - G||^2``.  All quantities are handled through a
single real decision vector of length ``4(m + n - d + 2)`` laid out as::

    Re f~ | Re g~ | Im f~ | Im g~ | Re a | Re b | Im a | Im b

with every block in descending coefficient order.  The iteration is the
modified Newton method: each step solves the equality-constrained
quadratic model ``[[I, J^T], [J, 0]] (dx; lam) = (-grad; -q)``.
"""
from dataclasses import dataclass, field
import logging

import numpy as np

from .linalg import (
    RANK_TOL,
    RankDeficiencyError,
    complex_to_real_block,
    smallest_singular_pair,
    solve_saddle_point,
)
from .poly import Poly, DegreeError, convolution_matrix, subresultant_matrix

log = logging.getLogger(__name__)


class NonConvergenceError(RuntimeError):
    """The iteration hit ``max_iterations``; ``state`` is the last iterate."""

    def __init__(self, msg, state=None):
        super().__init__(msg)
        self.state = state


@dataclass(frozen=True)
class OptimizerConfig:
    epsilon: float = 1e-8
    max_iterations: int = 50
    rank_tolerance: float = RANK_TOL

    def __post_init__(self):
        if not self.epsilon > 0:
            raise ValueError("epsilon must be positive")
        if self.max_iterations < 1:
            raise ValueError("max_iterations must be >= 1")


@dataclass
class IterationState:
    x: np.ndarray
    iteration: int = 0
    last_step_norm: float = np.inf
    constraint_norm: float = np.inf
    jacobian_sigma_ratio: float = np.nan
    history: list = field(default_factory=list, repr=False)


class Problem:
    """Inputs ``F``, ``G``, ``d`` together with the decision-vector layout.

    ``F`` and ``G`` are swapped by the caller if needed; here ``deg F >=
    deg G >= d > 0`` is required.
    """

    def __init__(self, F, G, d):
        F = F if isinstance(F, Poly) else Poly(F)
        G = G if isinstance(G, Poly) else Poly(G)
        m, n = F.degree, G.degree
        if not (m >= n > 0):
            raise DegreeError(f"need deg F >= deg G > 0, got m={m}, n={n}")
        if not (n >= d > 0):
            raise DegreeError(f"need deg G >= d > 0, got n={n}, d={d}")
        self.F, self.G = F, G
        self.m, self.n, self.d = m, n, int(d)

        # block boundaries, in layout order
        sizes = [m + 1, n + 1, m + 1, n + 1, n - d + 1, m - d + 1, n - d + 1, m - d + 1]
        edges = np.concatenate([[0], np.cumsum(sizes)])
        names = ["f1", "g1", "f2", "g2", "a1", "b1", "a2", "b2"]
        self.slices = {k: slice(int(edges[i]), int(edges[i + 1])) for i, k in enumerate(names)}
        self.size = int(edges[-1])
        self.n_coef = 2 * (m + n + 2)
        self.n_constraints = 2 * (m + n - d + 1) + 1
        self._x_orig = np.concatenate([
            F.desc().real, G.desc().real, F.desc().imag, G.desc().imag,
        ])

    def __repr__(self):
        return f"Problem(m={self.m}, n={self.n}, d={self.d})"

    # -- layout -------------------------------------------------------------

    def pack(self, f, g, a, b):
        """Pack ``F~, G~, A, B`` into a decision vector.

        Polynomials shorter than their slot are zero-padded at the top;
        longer ones raise :class:`DegreeError`.
        """
        slots = {"f": self.m, "g": self.n, "a": self.n - self.d, "b": self.m - self.d}
        desc = {}
        for name, p in zip("fgab", (f, g, a, b)):
            p = p if isinstance(p, Poly) else Poly(p)
            if p.degree > slots[name]:
                raise DegreeError(f"{name} has degree {p.degree} > slot {slots[name]}")
            c = np.zeros(slots[name] + 1, dtype=complex)
            c[slots[name] - p.degree:] = p.desc()
            desc[name] = c
        return np.concatenate([
            desc["f"].real, desc["g"].real, desc["f"].imag, desc["g"].imag,
            desc["a"].real, desc["b"].real, desc["a"].imag, desc["b"].imag,
        ])

    def block(self, x, name):
        """Complex descending coefficients of ``f``, ``g``, ``a`` or ``b``."""
        s = self.slices
        return x[s[name + "1"]] + 1j * x[s[name + "2"]]

    def unpack(self, x):
        """Return ``(F~, G~, A, B)`` as :class:`Poly`."""
        x = np.asarray(x, dtype=float)
        return tuple(Poly.from_desc(self.block(x, k)) for k in "fgab")

    def cofactor_vector(self, x):
        """Real stacked kernel vector ``(v1; v2)`` of the cofactors."""
        s = self.slices
        return np.concatenate([x[s["a1"]], x[s["b1"]], x[s["a2"]], x[s["b2"]]])

    def coefficient_part(self, x):
        return np.asarray(x)[: self.n_coef]

    # -- objective ----------------------------------------------------------

    def objective(self, x):
        """``||F~ - F||^2 + ||G~ - G||^2`` in the real coordinates."""
        r = self.coefficient_part(x) - self._x_orig
        return float(r @ r)

    def gradient(self, x):
        """Gradient of the halved objective; zero on the cofactor block."""
        g = np.zeros(self.size)
        g[: self.n_coef] = self.coefficient_part(x) - self._x_orig
        return g

    # -- constraint ---------------------------------------------------------

    def subresultant_block(self, x):
        """Real embedding of ``N_{d-1}(F~, G~)`` built from the iterate."""
        f, g = self.block(x, "f"), self.block(x, "g")
        return complex_to_real_block(subresultant_matrix(Poly.from_desc(f), Poly.from_desc(g), self.d - 1))

    def constraint(self, x):
        """Stacked constraint ``q(x)``.

        Row 0 is ``||A||^2 + ||B||^2 - 1``; the remaining rows are the real
        and imaginary parts of the descending coefficients of
        ``A F~ + B G~``.
        """
        x = np.asarray(x, dtype=float)
        v = self.cofactor_vector(x)
        f, g, a, b = (self.block(x, k) for k in "fgab")
        w = np.convolve(a, f) + np.convolve(b, g)
        return np.concatenate([[v @ v - 1.0], w.real, w.imag])

    def jacobian(self, x):
        """Jacobian of :meth:`constraint`, shape ``(2(m+n-d+1)+1, 4(m+n-d+2))``.

        ::

            [ 0    0    2 v1^T  2 v2^T ]
            [ A1  -A2   N1     -N2     ]
            [ A2   A1   N2      N1     ]

        with ``A1 + i A2 = [C_m(A) | C_n(B)]`` and ``N1 + i N2 = N_{d-1}(F~, G~)``.
        """
        x = np.asarray(x, dtype=float)
        a, b = self.block(x, "a"), self.block(x, "b")
        ab = np.hstack([convolution_matrix(a, self.m), convolution_matrix(b, self.n)])
        jac = np.zeros((self.n_constraints, self.size))
        jac[0, self.n_coef:] = 2.0 * self.cofactor_vector(x)
        jac[1:, : self.n_coef] = complex_to_real_block(ab)
        jac[1:, self.n_coef:] = self.subresultant_block(x)
        return jac

    # -- start point --------------------------------------------------------

    def initialize(self):
        """Start at ``(F, G)`` with cofactors from the smallest singular vector.

        The right singular vector of the embedded ``N_{d-1}(F, G)`` for its
        smallest singular value has unit norm, so the normalization row of
        the constraint holds at the start point.
        """
        x = np.zeros(self.size)
        x[: self.n_coef] = self._x_orig
        x0 = x.copy()
        _, _, v = smallest_singular_pair(self.subresultant_block(x0))
        k = self.n - self.d + 1
        l = self.m - self.d + 1
        v1, v2 = v[: k + l], v[k + l:]
        s = self.slices
        x0[s["a1"]], x0[s["b1"]] = v1[:k], v1[k:]
        x0[s["a2"]], x0[s["b2"]] = v2[:k], v2[k:]
        return x0


def run(problem, config=None, x0=None):
    """Run the modified Newton iteration from the SVD start point.

    Each iteration takes the full step from one saddle-point solve and
    stops once the step's 2-norm drops to ``config.epsilon``.  The
    iteration count includes that last step.

    Raises
    ------
    NonConvergenceError
        After ``config.max_iterations`` steps without meeting the tolerance.
    RankDeficiencyError
        If the constraint Jacobian loses rank along the path.
    """
    config = config or OptimizerConfig()
    x = problem.initialize() if x0 is None else np.array(x0, dtype=float)
    state = IterationState(x=x)
    for it in range(1, config.max_iterations + 1):
        q = problem.constraint(x)
        jac = problem.jacobian(x)
        try:
            dx, _, ratio = solve_saddle_point(
                jac, problem.gradient(x), q, rank_tol=config.rank_tolerance)
        except RankDeficiencyError as err:
            state.iteration = it - 1
            state.constraint_norm = float(np.linalg.norm(q, np.inf))
            state.jacobian_sigma_ratio = err.ratio
            err.state = state
            raise
        x = x + dx
        step = float(np.linalg.norm(dx))
        state.x = x
        state.iteration = it
        state.last_step_norm = step
        state.jacobian_sigma_ratio = ratio
        state.history.append(step)
        log.debug("iteration %d: |dx| = %.3e, |q| = %.3e", it, step, np.linalg.norm(q, np.inf))
        if step <= config.epsilon:
            state.constraint_norm = float(np.linalg.norm(problem.constraint(x), np.inf))
            return state
    state.constraint_norm = float(np.linalg.norm(problem.constraint(x), np.inf))
    raise NonConvergenceError(
        f"no convergence in {config.max_iterations} iterations "
        f"(last step {state.last_step_norm:.3e})", state=state)
