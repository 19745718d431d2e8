"""
Approximate GCD of two complex polynomials
==========================================

Two polynomials that *almost* share a quadratic factor.  We ask for a
degree-2 common divisor and get back the nearest pair that really has
one, along with the divisor itself.
"""
import numpy as np

from gpgcd import Poly, approx_gcd

# (x - i)(x + 2) is the common factor; each side gets its own cofactor
H = Poly.from_roots([1j, -2])
F = H * Poly.from_roots([3, 1 - 1j, 0.5])
G = H * Poly.from_roots([-1j, 4])

# blur both inputs a little so they become coprime
rng = np.random.default_rng(0)
noise = lambda k: Poly(1e-3 * (rng.standard_normal(k) + 1j * rng.standard_normal(k)))
F_noisy = F + noise(F.degree)
G_noisy = G + noise(G.degree)

res = approx_gcd(F_noisy, G_noisy, 2)
print("iterations      :", res.iterations)
print("perturbation    :", f"{res.perturbation:.3e}")

# H is only defined up to a scalar; make it monic to compare with the planted one
monic = Poly(res.H.coeffs / res.H.coeffs[-1])
print("GCD (monic)     :", monic)
print("roots of the GCD:", np.round(np.roots(monic.desc()), 4))

# the corrected pair is an exact multiple of H
print("F~ == H*B       :", res.F_tilde == res.H * res.B)
print("G~ == H*A       :", res.G_tilde == res.H * res.A)
