"""
Convolution and subresultant matrices
=====================================

Polynomial multiplication is a banded linear map, and a common factor of
degree ``d`` shows up as a null vector of the ``(d-1)``-th subresultant
matrix.  Complex systems are handled through their real block embedding.
"""
import numpy as np

from gpgcd import Poly, convolution_matrix, subresultant_matrix
from gpgcd.linalg import complex_to_real_block, smallest_singular_pair

p = Poly([1, 2j, 3])          # 3x^2 + 2i x + 1
q = Poly([1 - 1j, 1])         # x + (1 - i)
C = convolution_matrix(p, q.degree)
print("C_1(p) =\n", C)
print("C_1(p) @ desc(q) == desc(p*q):", np.allclose(C @ q.desc(), (p * q).desc()))

# F and G share the factor (x - 1)(x - 2i)
common = Poly.from_roots([1, 2j])
F = common * Poly.from_roots([3, -1])
G = common * Poly.from_roots([-2])
for d in (1, 2, 3):
    N = complex_to_real_block(subresultant_matrix(F, G, d - 1))
    s, _, v = smallest_singular_pair(N)
    print(f"d={d}: N_{d-1} is {N.shape[0]}x{N.shape[1]}, smallest singular value {s:.2e}")

# the null vector for d = 2 holds cofactors A, B with A F + B G = 0
N = complex_to_real_block(subresultant_matrix(F, G, 1))
_, _, v = smallest_singular_pair(N)
half = v.size // 2
w = v[:half] + 1j * v[half:]
A = Poly.from_desc(w[: G.degree - 2 + 1])
B = Poly.from_desc(w[G.degree - 2 + 1:])
print("|A F + B G|^2 =", f"{(A * F + B * G).norm2_sq():.2e}")
