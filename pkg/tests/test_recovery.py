import numpy as np
import pytest

from gpgcd import Poly, Problem, RankDeficiencyError, RecoveryError, approx_gcd, recover_gcd, run
from gpgcd import recovery
from gpgcd.poly import DegreeError, convolution_matrix
from gpgcd.recovery import least_squares_divide, normalize_gauge

from conftest import random_poly


def same_up_to_scalar(p, q, tol):
    k = int(np.argmax(np.abs(q.coeffs)))
    a, b = normalize_gauge(p, k), normalize_gauge(q, k)
    return np.max(np.abs(a.coeffs - b.coeffs)) <= tol


def test_divide_example():
    h = least_squares_divide(Poly([1, 0, 1]), Poly([-1j, 1]), 1)
    np.testing.assert_allclose(h.coeffs, [1j, 1], atol=1e-15)
    # oracle: multiply back
    assert ((h * Poly([-1j, 1])) - Poly([1, 0, 1])).norm2_sq() <= 1e-28


def test_divide_by_itself():
    b = Poly([2 - 1j, 3, 1j])
    h = least_squares_divide(b, b, 0)
    np.testing.assert_allclose(h.coeffs, [1], atol=1e-14)


def test_divide_roundtrip(rng):
    for _ in range(20):
        dh, db = rng.integers(0, 7, 2)
        H, B = random_poly(rng, int(dh)), random_poly(rng, int(db))
        got = least_squares_divide(H * B, B, int(dh))
        assert np.max(np.abs(got.coeffs - H.coeffs)) <= 1e-10 * max(1.0, H.norm())


def test_divide_least_squares_property(rng):
    # residual is orthogonal to the range of the convolution map
    t, b = random_poly(rng, 6), random_poly(rng, 2)
    h = least_squares_divide(t, b, 4)
    r = (b * h - t).desc()
    assert np.linalg.norm(convolution_matrix(b, 4).conj().T @ r) <= 1e-12 * t.norm()


def test_divide_errors():
    with pytest.raises(DegreeError):
        least_squares_divide(Poly([1, 2, 3]), Poly([1, 1]), 2)
    with pytest.raises(RankDeficiencyError):
        least_squares_divide(Poly([1, 2, 3]), Poly([0, 0]), 1)


@pytest.mark.parametrize("roots_f, roots_g, root_h", [
    ([1, -2], [1, 3], 1),
    ([1j, -1], [1j, 1], 1j),
])
def test_recover_exact_instances(roots_f, roots_g, root_h):
    F, G = Poly.from_roots(roots_f), Poly.from_roots(roots_g)
    res = approx_gcd(F, G, 1)
    assert res.perturbation <= 1e-8
    assert same_up_to_scalar(res.H, Poly.from_roots([root_h]), 1e-8)
    assert np.max(np.abs(res.F_tilde.coeffs - F.coeffs)) <= 1e-8
    assert np.max(np.abs(res.G_tilde.coeffs - G.coeffs)) <= 1e-8


def test_recover_invariants(rng):
    for m, n, d in [(6, 5, 3), (8, 8, 4), (5, 5, 5)]:
        H0 = random_poly(rng, d)
        F = H0 * random_poly(rng, m - d) + random_poly(rng, m, 0.02)
        G = H0 * random_poly(rng, n - d) + random_poly(rng, n, 0.02)
        problem = Problem(F, G, d)
        state = run(problem)
        res = recover_gcd(state.x, problem, iterations=state.iteration)

        assert res.H.degree == d
        assert res.F_tilde == res.H * res.B
        assert res.G_tilde == res.H * res.A
        assert res.perturbation == pytest.approx(
            (res.F_tilde - F).norm2_sq() + (res.G_tilde - G).norm2_sq(), rel=1e-14)

        # residual_chosen is the minimum over both quotients and both signs
        f, g, a, b = problem.unpack(state.x)
        h1 = least_squares_divide(g, a, d)
        h2 = least_squares_divide(f, b, d)
        rs = [(f + h * b).norm2_sq() + (g - h * a).norm2_sq()
              for h in (h1, -h1, h2, -h2)]
        assert res.residual_chosen == pytest.approx(min(rs), rel=1e-12, abs=1e-300)
        assert res.iterations == state.iteration
        assert not res.degenerate_leading_coefficient


def test_literal_residual_is_off_by_sign(rng):
    """With A F~ + B G~ = 0 the unsigned pair (B, A) gives residual ~ 4||F~||^2."""
    H = random_poly(rng, 2)
    Fb, Gb = random_poly(rng, 3), random_poly(rng, 2)
    t = 1 / np.sqrt(Fb.norm2_sq() + Gb.norm2_sq())
    f, g, a, b = H * Fb, H * Gb, Gb * t, Fb * (-t)
    h1 = least_squares_divide(g, a, 2)
    literal = (f - h1 * b).norm2_sq() + (g - h1 * a).norm2_sq()
    assert literal == pytest.approx(4 * f.norm2_sq(), rel=1e-10)
    problem = Problem(f, g, 2)
    res = recover_gcd(problem.pack(f, g, a, b), problem)
    assert res.residual_chosen <= 1e-20


def test_recovery_fails_without_cofactors(rng):
    problem = Problem(random_poly(rng, 4), random_poly(rng, 3), 2)
    x = problem.pack(problem.F, problem.G, Poly([0, 0]), Poly([0, 0, 0]))
    with pytest.raises(RecoveryError):
        recover_gcd(x, problem)


def test_recovery_fails_on_bad_residual(rng, monkeypatch):
    problem = Problem(random_poly(rng, 4), random_poly(rng, 3), 2)
    x = problem.initialize()
    monkeypatch.setattr(recovery, "least_squares_divide", lambda t, c, d: Poly(1e6 * np.ones(d + 1)))
    with pytest.raises(RecoveryError):
        recover_gcd(x, problem)


def test_approx_gcd_swaps_inputs(rng):
    H0 = random_poly(rng, 2)
    F = H0 * random_poly(rng, 2)
    G = H0 * random_poly(rng, 4)
    res = approx_gcd(F, G, 2)
    assert res.swapped
    assert res.F_tilde.degree == 4 and res.G_tilde.degree == 6
    assert res.F_tilde == res.H * res.B
    assert res.G_tilde == res.H * res.A
    assert (res.F_tilde - F).norm2_sq() + (res.G_tilde - G).norm2_sq() == pytest.approx(res.perturbation)
    assert res.perturbation <= 1e-8


def test_normalized_gcd_gauge(rng):
    H = random_poly(rng, 3)
    c = 2.5 * np.exp(0.7j)
    a, b = normalize_gauge(H), normalize_gauge(H * c)
    np.testing.assert_allclose(a.coeffs, b.coeffs, atol=1e-14)
    k = int(np.argmax(np.abs(a.coeffs)))
    assert a.coeffs[k].imag == pytest.approx(0, abs=1e-15) and a.coeffs[k].real > 0
    assert a.norm() == pytest.approx(1.0)
