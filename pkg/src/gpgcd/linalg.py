"""Dense real linear algebra used by the optimizer and the GCD recovery."""
import numpy as np

#: Default relative threshold on sigma_min / sigma_max below which a
#: matrix is treated as rank deficient.
RANK_TOL = 1e-12


class RankDeficiencyError(np.linalg.LinAlgError):
    """A matrix that has to have full rank does not.

    Attributes
    ----------
    rank : int
        Numerically estimated rank.
    shape : tuple
        Shape of the offending matrix.
    ratio : float
        ``sigma_min / sigma_max``.
    """

    def __init__(self, msg, rank=None, shape=None, ratio=None):
        super().__init__(msg)
        self.rank = rank
        self.shape = shape
        self.ratio = ratio


def complex_to_real_block(m):
    """Real embedding ``[[Re M, -Im M], [Im M, Re M]]`` of a complex matrix.

    Acting on ``(Re w; Im w)`` it produces ``(Re Mw; Im Mw)``.  1-D input is
    treated as a column vector and returns its real/imaginary stack.
    """
    m = np.asarray(m)
    if m.ndim == 1:
        return np.concatenate([m.real, m.imag])
    re, im = m.real, m.imag
    return np.block([[re, -im], [im, re]])


def real_to_complex(v):
    """Inverse of the vector embedding: ``(v1; v2) -> v1 + i v2``."""
    v = np.asarray(v, dtype=float)
    h = v.size // 2
    return v[:h] + 1j * v[h:]


def smallest_singular_pair(m):
    """Smallest singular value of a tall matrix with its singular vectors.

    Returns
    -------
    sigma : float
    u : ndarray
        Left singular vector, ``M @ v == sigma * u``.
    v : ndarray
        Right singular vector with unit 2-norm.
    """
    m = np.asarray(m, dtype=float)
    if m.shape[0] < m.shape[1]:
        raise ValueError(f"need rows >= cols, got shape {m.shape}")
    u, s, vt = np.linalg.svd(m, full_matrices=False)
    return float(s[-1]), u[:, -1], vt[-1]


def solve_least_squares(a, b, rank_tol=RANK_TOL):
    """Minimize ``||a x - b||_2`` for a tall matrix of full column rank.

    Raises
    ------
    RankDeficiencyError
        If ``a`` is numerically rank deficient; ``err.rank`` carries the
        effective rank.
    """
    a = np.asarray(a, dtype=float)
    b = np.asarray(b, dtype=float)
    if a.shape[0] < a.shape[1]:
        raise ValueError(f"need rows >= cols, got shape {a.shape}")
    u, s, vt = np.linalg.svd(a, full_matrices=False)
    smax = s[0] if s.size else 0.0
    if smax == 0.0 or s[-1] < rank_tol * smax:
        rank = int(np.sum(s > rank_tol * smax)) if smax > 0 else 0
        raise RankDeficiencyError(
            f"least squares matrix is rank deficient (rank {rank} < {a.shape[1]})",
            rank=rank, shape=a.shape, ratio=(s[-1] / smax if smax else 0.0),
        )
    return vt.T @ ((u.T @ b) / s)


def solve_saddle_point(jac, grad, q, rank_tol=RANK_TOL):
    """Solve ``[[I, J^T], [J, 0]] (d; lam) = (-grad; -q)``.

    One thin SVD of ``J`` is used both for the rank check and the solve:
    with ``J = U S V^T``,

        d   = -(I - V V^T) grad - V S^-1 U^T q
        lam = U S^-1 (S^-1 U^T q - V^T grad)

    Returns
    -------
    d, lam : ndarray
    sigma_ratio : float
        ``sigma_min(J) / sigma_max(J)``.
    """
    jac = np.asarray(jac, dtype=float)
    grad = np.asarray(grad, dtype=float)
    q = np.asarray(q, dtype=float)
    r, c = jac.shape
    if r > c:
        raise ValueError(f"constraint Jacobian must be wide, got shape {jac.shape}")
    if grad.shape != (c,) or q.shape != (r,):
        raise ValueError("dimension mismatch between J, grad and q")
    u, s, vt = np.linalg.svd(jac, full_matrices=False)
    smax = s[0]
    ratio = s[-1] / smax if smax > 0 else 0.0
    if ratio < rank_tol:
        rank = int(np.sum(s > rank_tol * smax)) if smax > 0 else 0
        raise RankDeficiencyError(
            f"constraint Jacobian is rank deficient (rank {rank} < {r})",
            rank=rank, shape=jac.shape, ratio=ratio,
        )
    vg = vt @ grad
    uq = (u.T @ q) / s
    d = -grad + vt.T @ vg - vt.T @ uq
    lam = u @ ((uq - vg) / s)
    return d, lam, float(ratio)
