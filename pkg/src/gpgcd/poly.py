"""Univariate polynomials over C and the structured matrices built from them.

Coefficients are stored in ascending order (``coeffs[j]`` multiplies
``x**j``).  The matrix builders use the descending convention, so
``C_k(P) @ desc(Q) == desc(P * Q)``.
"""
import numpy as np


class DegreeError(ValueError):
    """Raised when degrees or orders passed to a builder are inconsistent."""


class Poly:
    """Complex univariate polynomial with a fixed nominal degree.

    The nominal degree is a slot size, not the mathematical degree: a
    leading coefficient that is zero (or tiny) is kept as is.  Instances
    are immutable.

    Parameters
    ----------
    coeffs : array_like
        Ascending coefficients; anything ``np.asarray`` can turn into a
        1-D complex array.  An empty sequence means the zero polynomial.
    """

    __slots__ = ("_c",)

    def __init__(self, coeffs):
        c = np.array(coeffs, dtype=complex).ravel()
        if c.size == 0:
            c = np.zeros(1, dtype=complex)
        if not np.all(np.isfinite(c)):
            raise ValueError("polynomial coefficients must be finite")
        c.flags.writeable = False
        self._c = c

    @classmethod
    def from_desc(cls, coeffs):
        """Build from descending coefficients (leading coefficient first)."""
        return cls(np.asarray(coeffs, dtype=complex)[::-1])

    @classmethod
    def from_roots(cls, roots, lead=1.0):
        c = np.array([lead], dtype=complex)
        for r in roots:
            c = np.convolve(c, [-r, 1.0])
        return cls(c)

    @property
    def coeffs(self):
        return self._c

    @property
    def degree(self):
        return self._c.size - 1

    def desc(self):
        """Descending coefficient vector, ``(p_n, ..., p_0)``."""
        return self._c[::-1].copy()

    @property
    def real(self):
        return Poly(self._c.real)

    @property
    def imag(self):
        return Poly(self._c.imag)

    def norm2_sq(self):
        return float(np.sum(self._c.real ** 2 + self._c.imag ** 2))

    def norm(self):
        return float(np.sqrt(self.norm2_sq()))

    def __call__(self, x):
        return np.polyval(self._c[::-1], x)

    def __add__(self, other):
        other = _as_poly(other)
        n = max(self._c.size, other._c.size)
        out = np.zeros(n, dtype=complex)
        out[: self._c.size] += self._c
        out[: other._c.size] += other._c
        return Poly(out)

    __radd__ = __add__

    def __neg__(self):
        return Poly(-self._c)

    def __sub__(self, other):
        return self + (-_as_poly(other))

    def __rsub__(self, other):
        return _as_poly(other) - self

    def __mul__(self, other):
        if np.isscalar(other):
            return Poly(self._c * other)
        other = _as_poly(other)
        return Poly(np.convolve(self._c, other._c))

    def __rmul__(self, other):
        return self * other

    def __eq__(self, other):
        if not isinstance(other, Poly):
            return NotImplemented
        return self._c.size == other._c.size and bool(np.all(self._c == other._c))

    def __hash__(self):
        return hash(self._c.tobytes())

    def __len__(self):
        return self._c.size

    def __repr__(self):
        return f"Poly({self._c.tolist()!r})"

    def __str__(self):
        terms = []
        for j in range(self.degree, -1, -1):
            c = self._c[j]
            if c == 0 and self.degree > 0:
                continue
            s = f"({c.real:g}{c.imag:+g}j)"
            if j > 0:
                s += "*x" if j == 1 else f"*x**{j}"
            terms.append(s)
        return " + ".join(terms) if terms else "0"


def _as_poly(p):
    if isinstance(p, Poly):
        return p
    return Poly(np.atleast_1d(p))


def add(p, q):
    return _as_poly(p) + _as_poly(q)


def mul(p, q):
    return _as_poly(p) * _as_poly(q)


def norm2_sq(p):
    return _as_poly(p).norm2_sq()


def real_part(p):
    return _as_poly(p).real


def imag_part(p):
    return _as_poly(p).imag


def convolution_matrix(p, k):
    """Band matrix ``C_k(p)`` of shape ``(deg p + k + 1, k + 1)``.

    Column ``c`` holds the descending coefficients of `p` shifted down by
    ``c`` rows, so that multiplying by the descending coefficient vector
    of a degree-`k` polynomial gives the descending coefficients of the
    product.  Real input gives a real matrix.
    """
    if k < 0:
        raise DegreeError(f"convolution matrix needs k >= 0, got {k}")
    if isinstance(p, Poly):
        col = p.desc()
    else:
        col = np.asarray(p)
    n = col.size - 1
    out = np.zeros((n + k + 1, k + 1), dtype=col.dtype)
    for c in range(k + 1):
        out[c : c + n + 1, c] = col
    return out


def subresultant_matrix(f, g, k):
    """``N_k(f, g) = [C_{n-k-1}(f) | C_{m-k-1}(g)]``.

    Shape is ``(m + n - k, m + n - 2k)`` where ``m = deg f >= n = deg g``.
    The kernel vector ``(desc(A); desc(B))`` of this matrix gives
    cofactors with ``A f + B g = 0``.
    """
    f = _as_poly(f)
    g = _as_poly(g)
    m, n = f.degree, g.degree
    if not (0 <= k < n <= m):
        raise DegreeError(f"subresultant needs 0 <= k < n <= m, got k={k}, m={m}, n={n}")
    return np.hstack([convolution_matrix(f, n - k - 1), convolution_matrix(g, m - k - 1)])
