import numpy as np
import pytest
import sympy as sp

from gpgcd import Poly

_X = sp.Symbol("x")


def exact_poly(coeffs):
    """sympy polynomial over Q(i) from ascending Gaussian-integer coefficients."""
    terms = [int(c.real) + int(c.imag) * sp.I for c in coeffs]
    return sp.Poly(list(reversed(terms)), _X, domain="QQ_I")


def exact_gcd_degree(f, g):
    return sp.gcd(exact_poly(f.coeffs), exact_poly(g.coeffs)).degree()


def random_poly(rng, deg, scale=1.0):
    return Poly(scale * (rng.standard_normal(deg + 1) + 1j * rng.standard_normal(deg + 1)))


def gaussian_int_poly(rng, deg, lo=-3, hi=3, monic=False):
    c = rng.integers(lo, hi + 1, deg + 1) + 1j * rng.integers(lo, hi + 1, deg + 1)
    if monic:
        c[-1] = 1
    elif c[-1] == 0:
        c[-1] = 1 + 1j
    return Poly(c)


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


_REPORT_KEY = pytest.StashKey[list]()


@pytest.fixture
def acceptance(request):
    """Record one pass/fail line for an acceptance criterion."""
    lines = request.config.stash.setdefault(_REPORT_KEY, [])

    def report(number, title, ok, detail=""):
        lines.append((number, f"[{'PASS' if ok else 'FAIL'}] criterion {number}: {title}"
                      + (f" ({detail})" if detail else "")))
        return ok

    return report


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    lines = config.stash.get(_REPORT_KEY, [])
    if not lines:
        return
    terminalreporter.section("acceptance criteria")
    for _, line in sorted(lines, key=lambda t: t[0]):
        terminalreporter.write_line(line)
